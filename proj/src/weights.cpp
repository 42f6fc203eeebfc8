#include "gwm/weights.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace gwm {

WeightSystem::WeightSystem(std::vector<Rat> alpha) : a_(std::move(alpha)) {
  if (a_.empty()) throw DomainError("WeightSystem: empty weight vector");
  sig_ = esym(a_);
  distinct_ = true;
  for (size_t i = 0; i + 1 < a_.size() && distinct_; ++i)
    for (size_t j = i + 1; j < a_.size(); ++j)
      if (a_[i] == a_[j]) {
        distinct_ = false;
        break;
      }
  if (distinct_) {
    phi_.resize(a_.size(), Rat(1));
    for (size_t i = 0; i < a_.size(); ++i)
      for (size_t k = 0; k < a_.size(); ++k)
        if (k != i) phi_[i] *= a_[i] - a_[k];
  }
}

const Rat& WeightSystem::alpha(int i) const {
  if (i < 0 || i >= n()) throw DomainError("WeightSystem::alpha: index");
  return a_[static_cast<size_t>(i)];
}

const Rat& WeightSystem::sigma(int r) const {
  if (r < 0 || r > n()) throw DomainError("WeightSystem::sigma: index");
  return sig_[static_cast<size_t>(r)];
}

const Rat& WeightSystem::point_factor(int i) const {
  if (!distinct_)
    throw DegenerateWeights("WeightSystem::point_factor: weights not distinct");
  if (i < 0 || i >= n()) throw DomainError("WeightSystem::point_factor: index");
  return phi_[static_cast<size_t>(i)];
}

WeightSystem WeightSystem::reference(int n, const Rat& t) {
  if (n < 1) throw DomainError("WeightSystem::reference: n < 1");
  if (t == 0) throw DegenerateWeights("WeightSystem::reference: t = 0");
  std::vector<Rat> a;
  a.reserve(static_cast<size_t>(n));
  Rat lo(1), hi(2);  // consecutive magnitudes 1, 2, 3, 5, 8, ...
  for (int i = 0; i < n; ++i) {
    a.push_back(i % 2 == 0 ? Rat(t * lo) : Rat(-t * lo));
    Rat next = lo + hi;
    lo = hi;
    hi = next;
  }
  return WeightSystem(std::move(a));
}

WeightSystem WeightSystem::zero(int n) {
  if (n < 1) throw DomainError("WeightSystem::zero: n < 1");
  return WeightSystem(std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
}

WeightSystem WeightSystem::conjugate_pairs(int n, std::vector<Rat> u) {
  if (n < 2) throw DomainError("WeightSystem::conjugate_pairs: n < 2");
  int m = n / 2;
  if (u.empty())
    for (int i = 1; i <= m; ++i) u.push_back(Rat(1, i));
  if (static_cast<int>(u.size()) != m)
    throw DomainError("WeightSystem::conjugate_pairs: need n/2 parameters");
  std::vector<Rat> a;
  a.reserve(static_cast<size_t>(n));
  for (const Rat& v : u) {
    a.push_back(v);
    a.push_back(-v);
  }
  if (n % 2 == 1) a.push_back(Rat(0));
  return WeightSystem(std::move(a));
}

namespace {

Rat bounded_random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-97, 97);
  std::uniform_int_distribution<int> den(1, 97);
  return rat(num(rng), den(rng));
}

}  // namespace

WeightSystem WeightSystem::random(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::set<Rat> seen;
    while (static_cast<int>(seen.size()) < n) seen.insert(bounded_random_rat(rng));
    std::vector<Rat> a(seen.begin(), seen.end());
    std::shuffle(a.begin(), a.end(), rng);
    WeightSystem w(std::move(a));
    if (w.distinct()) return w;
  }
  throw DegenerateWeights("WeightSystem::random: no valid draw");
}

WeightSystem WeightSystem::random_conjugate_pairs(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  int m = n / 2;
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::set<Rat> mags;
    while (static_cast<int>(mags.size()) < m) {
      Rat v = bounded_random_rat(rng);
      if (v < 0) v = -v;
      if (v != 0) mags.insert(v);
    }
    std::vector<Rat> u(mags.begin(), mags.end());
    std::shuffle(u.begin(), u.end(), rng);
    WeightSystem w = conjugate_pairs(n, std::move(u));
    if (w.distinct()) return w;
  }
  throw DegenerateWeights("WeightSystem::random_conjugate_pairs: no valid draw");
}

}  // namespace gwm
