#include "jfunc/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <queue>
#include <sstream>

#include "jfunc/errors.hpp"

namespace jfunc {

LatticeVector LatticeVector::simple_root(int rank, int i) {
  LatticeVector v = zero(rank);
  v[i] = 1;
  return v;
}

bool LatticeVector::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

bool LatticeVector::is_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c >= 0; });
}

int LatticeVector::height() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0); }

LatticeVector LatticeVector::operator+(const LatticeVector& other) const {
  if (size() != other.size()) throw InvalidArgument("lattice vector dimension mismatch");
  LatticeVector r = *this;
  for (int i = 0; i < size(); ++i) r[i] += other[i];
  return r;
}

LatticeVector LatticeVector::operator-(const LatticeVector& other) const {
  if (size() != other.size()) throw InvalidArgument("lattice vector dimension mismatch");
  LatticeVector r = *this;
  for (int i = 0; i < size(); ++i) r[i] -= other[i];
  return r;
}

std::string LatticeVector::to_string() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coeffs_[i]);
  }
  return out;
}

LatticeVector LatticeVector::parse(std::string_view text) {
  std::vector<int> coeffs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
      throw InvalidArgument("cannot parse lattice vector '" + std::string(text) + "'");
    }
    coeffs.push_back(value);
    pos = comma + 1;
  }
  return LatticeVector(std::move(coeffs));
}

bool dominated_by(const LatticeVector& beta, const LatticeVector& alpha) {
  if (beta.size() != alpha.size()) throw InvalidArgument("lattice vector dimension mismatch");
  for (int i = 0; i < beta.size(); ++i) {
    if (beta[i] > alpha[i]) return false;
  }
  return true;
}

namespace {

bool valid_rank(Family family, int rank) {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 3;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

// Bourbaki numbering, zero-based indices. a_ij follows a_ij = 2(alpha_i,alpha_j)/(alpha_i,alpha_i),
// so the row of a short simple root adjacent to a long one carries the -2 / -3.
std::vector<int> build_cartan(Family family, int n) {
  std::vector<int> a(n * n, 0);
  auto set = [&](int i, int j, int v) { a[i * n + j] = v; };
  for (int i = 0; i < n; ++i) set(i, i, 2);
  auto link = [&](int i, int j) {
    set(i, j, -1);
    set(j, i, -1);
  };
  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      // alpha_1..alpha_{n-1} long, alpha_n short.
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      set(n - 2, n - 1, -1);
      set(n - 1, n - 2, -2);
      break;
    case Family::C:
      // alpha_1..alpha_{n-1} short, alpha_n long.
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      set(n - 2, n - 1, -2);
      set(n - 1, n - 2, -1);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n - 1; ++i) link(i, i + 1);
      link(n - 3, n - 2);
      link(n - 3, n - 1);
      break;
    case Family::E:
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
      link(0, 1);
      set(1, 2, -1);
      set(2, 1, -2);
      link(2, 3);
      break;
    case Family::G:
      // alpha_1 short, alpha_2 long.
      set(0, 1, -3);
      set(1, 0, -1);
      break;
  }
  return a;
}

}  // namespace

std::vector<int> symmetrizers_from_cartan(const std::vector<int>& cartan, int n) {
  if (static_cast<int>(cartan.size()) != n * n) throw InvalidArgument("Cartan matrix size mismatch");
  // Rational propagation along the Dynkin graph: d_j / d_i = a_ij / a_ji.
  std::vector<std::int64_t> num(n, 0), den(n, 1);
  for (int start = 0; start < n; ++start) {
    if (num[start] != 0) continue;
    std::vector<int> component;
    num[start] = 1;
    std::queue<int> todo;
    todo.push(start);
    while (!todo.empty()) {
      int i = todo.front();
      todo.pop();
      component.push_back(i);
      for (int j = 0; j < n; ++j) {
        if (j == i || cartan[i * n + j] == 0) continue;
        if (cartan[j * n + i] == 0) throw InvalidArgument("Cartan matrix is not symmetrizable");
        std::int64_t nj = num[i] * cartan[i * n + j];
        std::int64_t dj = den[i] * cartan[j * n + i];
        if (dj < 0) {
          nj = -nj;
          dj = -dj;
        }
        std::int64_t g = std::gcd(nj, dj);
        nj /= g;
        dj /= g;
        if (num[j] == 0) {
          num[j] = nj;
          den[j] = dj;
          todo.push(j);
        } else if (num[j] != nj || den[j] != dj) {
          throw InvalidArgument("Cartan matrix is not symmetrizable");
        }
      }
    }
    std::int64_t l = 1;
    for (int i : component) l = std::lcm(l, den[i]);
    std::int64_t g = 0;
    for (int i : component) g = std::gcd(g, num[i] * (l / den[i]));
    for (int i : component) {
      num[i] = num[i] * (l / den[i]) / g;
      den[i] = 1;
    }
  }
  std::vector<int> d(n);
  for (int i = 0; i < n; ++i) {
    if (num[i] <= 0) throw InvalidArgument("Cartan matrix is not symmetrizable");
    d[i] = static_cast<int>(num[i]);
  }
  return d;
}

RootSystem::RootSystem(Family family, int rank) : family_(family), rank_(rank) {
  if (!valid_rank(family, rank)) {
    throw InvalidArgument("invalid root system " + std::string(1, static_cast<char>(family)) +
                          std::to_string(rank));
  }
  cartan_ = build_cartan(family, rank);
  symmetrizers_ = symmetrizers_from_cartan(cartan_, rank);
}

RootSystem RootSystem::parse(std::string_view selector) {
  if (selector.size() < 2) throw InvalidArgument("invalid root system selector '" + std::string(selector) + "'");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(selector.front())));
  if (f < 'A' || f > 'G') throw InvalidArgument("unknown root system family '" + std::string(selector) + "'");
  std::string_view digits = selector.substr(1);
  int rank = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || end != digits.data() + digits.size()) {
    throw InvalidArgument("invalid root system selector '" + std::string(selector) + "'");
  }
  return RootSystem(static_cast<Family>(f), rank);
}

bool RootSystem::simply_laced() const {
  return std::all_of(symmetrizers_.begin(), symmetrizers_.end(), [](int d) { return d == 1; });
}

std::vector<std::pair<int, int>> RootSystem::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j)
      if (cartan(i, j) != 0) out.emplace_back(i, j);
  return out;
}

std::string RootSystem::name() const { return std::string(1, static_cast<char>(family_)) + std::to_string(rank_); }

namespace {
void check_dim(const RootSystem& spec, const LatticeVector& v) {
  if (v.size() != spec.rank()) {
    throw InvalidArgument("lattice vector of length " + std::to_string(v.size()) + " for rank " +
                          std::to_string(spec.rank()));
  }
}
}  // namespace

std::int64_t pairing(const RootSystem& spec, const LatticeVector& beta, const LatticeVector& gamma) {
  check_dim(spec, beta);
  check_dim(spec, gamma);
  std::int64_t total = 0;
  for (int i = 0; i < spec.rank(); ++i) {
    if (beta[i] == 0) continue;
    for (int j = 0; j < spec.rank(); ++j) {
      total += std::int64_t{beta[i]} * gamma[j] * spec.symmetrizer(i) * spec.cartan(i, j);
    }
  }
  return total;
}

std::int64_t norm_half(const RootSystem& spec, const LatticeVector& beta) {
  check_dim(spec, beta);
  std::int64_t total = 0;
  for (int i = 0; i < spec.rank(); ++i) {
    total += std::int64_t{beta[i]} * beta[i] * spec.symmetrizer(i);
    for (int j = i + 1; j < spec.rank(); ++j) {
      total += std::int64_t{beta[i]} * beta[j] * spec.symmetrizer(i) * spec.cartan(i, j);
    }
  }
  return total;
}

std::int64_t rho_pairing(const RootSystem& spec, const LatticeVector& alpha) {
  check_dim(spec, alpha);
  std::int64_t total = 0;
  for (int i = 0; i < spec.rank(); ++i) total += std::int64_t{spec.symmetrizer(i)} * alpha[i];
  return total;
}

void for_each_in_interval(const LatticeVector& alpha, const std::function<void(const LatticeVector&)>& visit) {
  if (!alpha.is_nonnegative()) throw InvalidArgument("interval bound " + alpha.to_string() + " has a negative coefficient");
  LatticeVector beta = LatticeVector::zero(alpha.size());
  while (true) {
    visit(beta);
    int i = alpha.size() - 1;
    while (i >= 0 && beta[i] == alpha[i]) {
      beta[i] = 0;
      --i;
    }
    if (i < 0) return;
    ++beta[i];
  }
}

std::vector<LatticeVector> enumerate_interval(const LatticeVector& alpha) {
  std::vector<LatticeVector> out;
  for_each_in_interval(alpha, [&](const LatticeVector& b) { out.push_back(b); });
  return out;
}

std::vector<LatticeVector> enumerate_box(int rank, int bound) {
  if (bound < 0) throw InvalidArgument("negative box bound");
  return enumerate_interval(LatticeVector(std::vector<int>(rank, bound)));
}

}  // namespace jfunc
