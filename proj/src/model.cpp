#include "gwm/model.hpp"

#include <numeric>
#include <sstream>

namespace gwm {

ModelSpec::ModelSpec(int n_, std::vector<int> degrees_)
    : n(n_), degrees(std::move(degrees_)) {
  if (n < 2) throw DomainError("ModelSpec: need at least two coordinates");
  for (int a : degrees)
    if (a < 1) throw DomainError("ModelSpec: degrees must be positive");
  if (nu() < 0) throw DomainError("ModelSpec: degree sum exceeds coordinate count");
  if (dim() < 1) throw DomainError("ModelSpec: target has dimension < 1");
}

int ModelSpec::degree_sum() const {
  return std::accumulate(degrees.begin(), degrees.end(), 0);
}

int ModelSpec::nu() const { return n - degree_sum(); }

bool ModelSpec::all_degrees_odd() const {
  for (int a : degrees)
    if (a % 2 == 0) return false;
  return !degrees.empty();
}

Int ModelSpec::degree_product() const {
  Int p = 1;
  for (int a : degrees) p *= a;
  return p;
}

Int ModelSpec::degree_factorial() const {
  Int p = 1;
  for (int a : degrees) p *= factorial(static_cast<unsigned long>(a));
  return p;
}

Int ModelSpec::degree_self_power() const {
  Int p = 1;
  for (int a : degrees)
    p *= int_pow(Int(a), static_cast<unsigned long>(a));
  return p;
}

ModelSpec ModelSpec::with_appended_linear() const {
  std::vector<int> d = degrees;
  d.push_back(1);
  return ModelSpec(n + 1, std::move(d));
}

std::string ModelSpec::label() const {
  std::ostringstream os;
  os << "X(";
  for (size_t i = 0; i < degrees.size(); ++i) {
    if (i) os << ",";
    os << degrees[i];
  }
  os << ") in P" << (n - 1);
  return os.str();
}

std::vector<int> parse_degrees(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw DomainError("parse_degrees: bad entry '" + tok + "'");
    }
    if (pos != tok.size() || v < 1)
      throw DomainError("parse_degrees: bad entry '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw DomainError("parse_degrees: empty degree list");
  return out;
}

}  // namespace gwm
