#ifndef COARSE_CERTIFICATE_DOCUMENT_HPP
#define COARSE_CERTIFICATE_DOCUMENT_HPP

#include <string>
#include <string_view>

#include "coarse/certify.hpp"

// Self-contained certificate documents:
//
//   certificate N
//   # format 1
//   E pairs P            followed by P lines "i j"
//   H pairs P            followed by P lines "i j", or
//   H phi D              followed by D lines "n: k1 k2 ...", or
//   H rule interval:r
//   families F
//   family 0 B           followed by B block lines "x1 x2 ..."
//   ...
//
// The verified flag is not stored; a parsed certificate must be re-verified.
namespace coarse::text
{

std::string write_certificate(const AsdimCertificate& c);
AsdimCertificate parse_certificate(std::string_view doc);

} // namespace coarse::text

#endif
