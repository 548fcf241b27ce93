#include "zonocert/rational.hpp"
#include "zonocert/errors.hpp"

#include <cctype>
#include <vector>

namespace zonocert {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::InvalidInput: return "InvalidInput";
  case ErrorKind::RankMismatch: return "RankMismatch";
  case ErrorKind::NotSquare: return "NotSquare";
  case ErrorKind::Singular: return "Singular";
  case ErrorKind::DegenerateSpan: return "DegenerateSpan";
  case ErrorKind::NotADicing: return "NotADicing";
  case ErrorKind::RepresentationCheckFailed: return "RepresentationCheckFailed";
  case ErrorKind::NonIntegerEntries: return "NonIntegerEntries";
  case ErrorKind::ZeroDirection: return "ZeroDirection";
  case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
  case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
  case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  case ErrorKind::SpanDeficient: return "SpanDeficient";
  case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
  case ErrorKind::NotInLattice: return "NotInLattice";
  case ErrorKind::Mismatch: return "Mismatch";
  case ErrorKind::BasisCheckFailed: return "BasisCheckFailed";
  case ErrorKind::EnumerationInsufficient: return "EnumerationInsufficient";
  case ErrorKind::DualityViolation: return "DualityViolation";
  case ErrorKind::CertificateInvalid: return "CertificateInvalid";
  }
  return "Unknown";
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto bad = [&] {
    return Error(ErrorKind::InvalidInput, "malformed rational \"" + std::string(text) + "\"");
  };
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) throw bad();
  Integer p(std::string(num), 10), q(std::string(den), 10);
  if (q == 0) throw Error(ErrorKind::InvalidInput, "zero denominator in \"" + std::string(text) + "\"");
  if (negative) p = -p;
  return rat(p, q);
}

std::string to_decimal(const Rational& r, int digits) {
  if (digits < 1) digits = 1;
  mpf_class f(r, 256);
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  gmp_snprintf(buf.data(), buf.size(), "%.*Fg", digits, f.get_mpf_t());
  return std::string(buf.data());
}

} // namespace zonocert
