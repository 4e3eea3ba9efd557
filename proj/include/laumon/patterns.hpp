#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "laumon/scalar.hpp"

namespace laumon {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive, no trailing zeros

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int part(int k) const {  // 0-based, zero beyond the last part
    return k >= 0 && k < int(parts.size()) ? parts[k] : 0;
  }
  int length() const { return int(parts.size()); }
  int sum() const;
  bool is_valid() const;

  auto operator<=>(const Partition&) const = default;
};

// Torus fixed point of a Laumon quasiflag space: a triangular array
// (d_{ij}), n-1 >= i >= j >= 1, with columns weakly decreasing downwards:
// d_{kj} >= d_{ij} for i >= k >= j.
struct FinitePattern {
  int n = 0;
  std::vector<std::vector<int>> rows;  // rows[i-1] = (d_{i1}, ..., d_{ii})

  static FinitePattern vacuum(int n);
  // d_{ij}; row n reads as 0 (no quota above the top row).
  int d(int i, int j) const;
  bool is_valid() const;
  std::vector<int> degree() const;  // (d_1, ..., d_{n-1})
  int total() const;

  std::optional<FinitePattern> add_box(int i, int j) const;
  std::optional<FinitePattern> remove_box(int i, int j) const;

  auto operator<=>(const FinitePattern&) const = default;
  std::string to_string() const;
};

// Torus fixed point of an affine Laumon space: an n-tuple of partitions,
// read as a doubly-infinite array through d(i,j) below.
struct AffinePattern {
  int n = 0;
  std::vector<Partition> lambdas;  // lambda^1 .. lambda^n

  static AffinePattern vacuum(int n);
  // (j mod n) taken in {1..n}
  static int residue(long j, int n);
  // d_{ij} = lambda^{(j mod n)}_{i-j}, defined for i >= j.
  int d(long i, long j) const;
  int max_len() const;
  bool is_valid() const;
  std::vector<int> degree() const;  // (d_1, ..., d_n), slot n is the paper's d_0
  int total() const;

  // p_{ij} = -x_{(j mod n)} + d_{ij} h + floor(-j/n) hp
  Scalar weight_p(long i, long j) const;
  // p_{ij} / h
  Scalar weight_p_hat(long i, long j) const;

  // Adds a box to lambda^l at slot m (0-based); null if not a partition.
  std::optional<AffinePattern> add_box(int l, int m) const;
  std::optional<AffinePattern> remove_box(int l, int m) const;

  auto operator<=>(const AffinePattern&) const = default;
  std::string to_string() const;
};

// Dominant integrable weight of level K: mu = (mu_{1-n}, ..., mu_0) with
// mu_0 + K >= mu_{1-n} >= ... >= mu_{-1} >= mu_0.
struct DominantWeight {
  int n = 0;
  int K = 0;
  std::vector<int> mu;  // mu[k] = mu_{1-n+k}

  bool is_valid() const;
  int mu_at(long rep) const { return mu.at(rep + n - 1); }  // rep in {1-n..0}
  // mu~_i = mu_{i mod n} + floor(-i/n) K, nonincreasing in i
  long mu_tilde(long i) const;
};

// Reduced-and-reflected height data of a cylindric plane partition:
// h(x, y) stored for x in {0..n-1}, y >= 0, weakly decreasing in y.
struct CylindricPartition {
  int n = 0;
  DominantWeight boundary;
  std::vector<std::vector<int>> heights;  // heights[x][y]

  int total_boxes() const;
  // degree vector read off the box positions (k = x + y-level residue)
  std::vector<int> degree() const;
};

// Enumeration in the canonical (lexicographic) order.
std::vector<FinitePattern> enumerate_finite(int n, const std::vector<int>& degree);
std::vector<AffinePattern> enumerate_affine(int n, const std::vector<int>& degree);
// All patterns with total degree <= cap, canonical order.
std::vector<FinitePattern> enumerate_finite_upto(int n, int cap);
std::vector<AffinePattern> enumerate_affine_upto(int n, int cap);

// The n^2-diagram form: matrix[k-1][l-1] = lambda^{kl}.
using DiagramCollection = std::vector<std::vector<Partition>>;
DiagramCollection convert_to_collection(const AffinePattern& p);
// Inverse; throws std::invalid_argument if the chain inequalities fail.
AffinePattern collection_to_pattern(int n, const DiagramCollection& c);

bool in_Dmu(const AffinePattern& p, const DominantWeight& w);

// The weight-preserving bijection with cylindric plane partitions; requires
// p in D(mu).
CylindricPartition to_cylindric(const AffinePattern& p, const DominantWeight& w);
AffinePattern from_cylindric(const CylindricPartition& c);

std::vector<Partition> partitions_of(int total);

}  // namespace laumon
