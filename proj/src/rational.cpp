#include "rational.hpp"

#include <cctype>
#include <sstream>

namespace flatmorse {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::SubsetOverflow: return "SubsetOverflow";
    case ErrorCode::NoInteriorWeight: return "NoInteriorWeight";
    case ErrorCode::IrregularWeights: return "IrregularWeights";
    case ErrorCode::GenusZero: return "GenusZero";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::UnresolvedBaseCase: return "UnresolvedBaseCase";
    case ErrorCode::AntipodalLog: return "AntipodalLog";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::SliceDimensionMismatch: return "SliceDimensionMismatch";
    case ErrorCode::DegenerateHessian: return "DegenerateHessian";
    case ErrorCode::CensusMismatch: return "CensusMismatch";
    case ErrorCode::ActionUndefined: return "ActionUndefined";
  }
  return "Unknown";
}

namespace {

BigInt parse_integer(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::Parse, "empty integer");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size())
    throw Error(ErrorCode::Parse, "sign without digits: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw Error(ErrorCode::Parse, "not an integer: '" + text + "'");
  return BigInt(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  // Floating-point weights are rejected outright; the regularity test is
  // an exact integrality condition.
  if (text.find('.') != std::string::npos ||
      text.find('e') != std::string::npos ||
      text.find('E') != std::string::npos)
    throw Error(ErrorCode::Parse,
                "rational expected (\"p/q\"), got '" + text + "'");
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  BigInt num = parse_integer(text.substr(0, slash));
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::Parse, "zero denominator: '" + text + "'");
  return Rational(num, den);
}

BigInt floor_rational(const Rational& r) {
  BigInt q = r.numerator() / r.denominator();  // truncates toward zero
  if (r.numerator() < 0 && q * r.denominator() != r.numerator()) --q;
  return q;
}

double to_double(const Rational& r) {
  return r.numerator().convert_to<double>() /
         r.denominator().convert_to<double>();
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

}  // namespace flatmorse
