#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace jfunc {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Element of the root lattice in the simple-root basis.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}
  LatticeVector(std::initializer_list<int> coeffs) : coeffs_(coeffs) {}

  static LatticeVector zero(int rank) { return LatticeVector(std::vector<int>(rank, 0)); }
  static LatticeVector simple_root(int rank, int i);

  int size() const { return static_cast<int>(coeffs_.size()); }
  int operator[](int i) const { return coeffs_[i]; }
  int& operator[](int i) { return coeffs_[i]; }
  const std::vector<int>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// True when every coefficient is nonnegative (membership in Q^{>=0}).
  bool is_nonnegative() const;
  /// Sum of coefficients, |alpha|.
  int height() const;

  LatticeVector operator+(const LatticeVector& other) const;
  LatticeVector operator-(const LatticeVector& other) const;

  auto operator<=>(const LatticeVector&) const = default;
  bool operator==(const LatticeVector&) const = default;

  /// "1,0,2"
  std::string to_string() const;
  /// Parses "1,0,2"; whitespace tolerated.
  static LatticeVector parse(std::string_view text);

 private:
  std::vector<int> coeffs_;
};

/// Componentwise partial order: beta <= alpha iff alpha - beta in Q^{>=0}.
bool dominated_by(const LatticeVector& beta, const LatticeVector& alpha);

/// Cartan datum of a finite root system with Bourbaki node numbering.
/// The bilinear form is (alpha_i, alpha_j) = d_i a_ij, short roots of length 2.
class RootSystem {
 public:
  /// Throws InvalidArgument for invalid family/rank combinations.
  RootSystem(Family family, int rank);

  /// Case-insensitive selector such as "A3", "g2", "E8".
  static RootSystem parse(std::string_view selector);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int cartan(int i, int j) const { return cartan_[i * rank_ + j]; }
  int symmetrizer(int i) const { return symmetrizers_[i]; }
  const std::vector<int>& symmetrizers() const { return symmetrizers_; }
  bool simply_laced() const;
  /// Unordered pairs (i, j), i < j, with a_ij != 0.
  std::vector<std::pair<int, int>> edges() const;
  /// "A3"
  std::string name() const;

  bool operator==(const RootSystem& other) const {
    return family_ == other.family_ && rank_ == other.rank_;
  }

 private:
  Family family_;
  int rank_;
  std::vector<int> cartan_;
  std::vector<int> symmetrizers_;
};

/// Derives d_i from a symmetrizable Cartan matrix (row-major, n x n) so that
/// d_i a_ij = d_j a_ji, with the smallest d on each component equal to 1.
std::vector<int> symmetrizers_from_cartan(const std::vector<int>& cartan, int n);

/// (beta, gamma) = sum_ij b_i c_j d_i a_ij.
std::int64_t pairing(const RootSystem& spec, const LatticeVector& beta, const LatticeVector& gamma);

/// (beta, beta) / 2, always an integer.
std::int64_t norm_half(const RootSystem& spec, const LatticeVector& beta);

/// (rho, alpha) = sum_i d_i a_i.
std::int64_t rho_pairing(const RootSystem& spec, const LatticeVector& alpha);

/// Every beta with 0 <= beta <= alpha, lexicographically (last coordinate fastest).
std::vector<LatticeVector> enumerate_interval(const LatticeVector& alpha);

/// Calls `visit` for every beta in the interval, in the same order as enumerate_interval.
void for_each_in_interval(const LatticeVector& alpha, const std::function<void(const LatticeVector&)>& visit);

/// Hypercube {alpha : 0 <= a_i <= bound} of the given rank, lexicographic.
std::vector<LatticeVector> enumerate_box(int rank, int bound);

}  // namespace jfunc
