#ifndef COARSE_KRULE_HPP
#define COARSE_KRULE_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "coarse/circle.hpp"
#include "coarse/errors.hpp"
#include "coarse/expr.hpp"
#include "coarse/phi.hpp"
#include "coarse/sequence.hpp"

namespace coarse
{

using SequenceRef = std::shared_ptr<const SequenceSubspace>;

// Finitely described precompact subset K of G, as a union of primitives.
// Group elements are written additively by their exponents (n stands for
// n * alpha).
class KRule
{
  public:
    struct Primitive
    {
        // Explicit finite set when `sequence` is null; otherwise the tail
        // {a_m - a_n : m in phi(n)} over the sequence.
        std::vector<Label> elements;
        std::optional<PhiGenerator> phi;
        SequenceRef sequence;
    };

    static KRule finite(std::vector<Label> elements);
    static KRule tail(PhiGenerator phi, SequenceRef sequence);

    // Union of the primitives of both rules.
    friend KRule operator|(const KRule& a, const KRule& b);

    const std::vector<Primitive>& primitives() const { return primitives_; }

    // Elements of K visible from the first `horizon` points of each tail's
    // sequence (explicit primitives are always fully visible); sorted.
    std::vector<Label> elements(std::size_t horizon) const;
    bool contains_identity(std::size_t horizon) const;

  private:
    std::vector<Primitive> primitives_;
};

// Pairs (n, m) whose difference a_m - a_n fails the windowed convergence test.
struct ConvergenceReport
{
    struct Offender
    {
        Index n;
        Index m;
        std::string reason;
    };
    std::vector<Offender> offenders;
    bool passed() const { return offenders.empty(); }
};

class NonConvergent : public Error
{
  public:
    NonConvergent(const std::string& what, ConvergenceReport report)
        : Error(what), report_(std::move(report))
    {
    }
    const ConvergenceReport& report() const { return report_; }

  private:
    ConvergenceReport report_;
};

// Windowed evidence that the tail {a_m - a_n : m in phi(n)} converges to 0,
// over the first `horizon` sequence points: every difference satisfies
// |a_m - a_n| < t_m + t_n exactly, and differences contributed by
// n >= horizon / 2 are closer to 0 than 2 t_(horizon / 4).
ConvergenceReport check_convergence(const PhiGenerator& phi, const SequenceSubspace& s,
                                    std::size_t horizon);

// K = union over n of phi(a_n) - a_n. Refuses phi failing validate_phi on the
// sequence window (PreconditionError) and tails failing the convergence
// check (NonConvergent).
KRule compact_rule_from_phi(const PhiGenerator& phi, SequenceRef s);

// Base entourage of an ideal member A: {(x, y) : x in A + y} u diagonal, or
// the transposed form, on a window labeled by exponents.
struct GroupTranslate
{
    std::vector<CirclePoint> elements;
    TranslateDirection direction = TranslateDirection::Forward;
};

// Throws InputError for unlabeled windows or elements outside G.
Relation translate_entourage(const GroupTranslate& a, const Window& w);
Relation translate_entourage(const KRule& k, std::size_t horizon, const Window& w,
                             TranslateDirection direction);

namespace text
{

//   krule P
//   # format 1
//   explicit: x1 x2 ...
//   tail: <sequence name> D      followed by D lines "n: k1 k2 ..."
std::string write_krule(const KRule& k);
KRule parse_krule(std::string_view doc, const std::vector<SequenceRef>& sequences);

} // namespace text

} // namespace coarse

#endif
