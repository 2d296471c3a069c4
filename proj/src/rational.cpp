#include "dofic/rational.hpp"

#include <stdexcept>

namespace dofic {

std::string frac_str(const Rat& r) {
  if (rat_den(r) == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

std::string decimal_str(const Rat& r, int digits) {
  Int n = rat_num(r);
  Int d = rat_den(r);
  std::string sign;
  if (n < 0) {
    sign = "-";
    n = -n;
  }
  Int whole = n / d;
  Int rem = n % d;
  std::string out = sign + whole.str();
  if (rem == 0) return out;
  std::string frac;
  for (int i = 0; i < digits && rem != 0; ++i) {
    rem *= 10;
    frac += char('0' + static_cast<int>(Int(rem / d)));
    rem %= d;
  }
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (frac.empty()) return out;
  return out + "." + frac;
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rat(num, den);
}

}  // namespace dofic
