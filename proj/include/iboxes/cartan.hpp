#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace iboxes {

/// Position of an index inside the ordered index set I.
using Color = std::size_t;

/// A generalized Cartan matrix over an ordered set of abstract labels,
/// together with its minimal symmetrizer d (d_i c_ij = d_j c_ji, gcd 1 on
/// each connected component of the Dynkin diagram).
class CartanMatrix {
public:
  std::size_t rank() const { return labels_.size(); }
  int operator()(Color i, Color j) const { return entries_[i * rank() + j]; }
  int symmetrizer(Color i) const { return symmetrizer_[i]; }
  std::span<const int> symmetrizer() const { return symmetrizer_; }

  const std::vector<std::string> &labels() const { return labels_; }
  const std::string &label(Color i) const { return labels_[i]; }
  std::optional<Color> index_of(std::string_view label) const;
  /// Throws UnknownIndex.
  Color require_index(std::string_view label) const;

  std::vector<std::vector<int>> rows() const;

  bool operator==(const CartanMatrix &) const = default;

private:
  friend CartanMatrix validate_cartan(std::vector<std::string> labels,
                                      const std::vector<std::vector<int>> &entries);
  CartanMatrix() = default;

  std::vector<std::string> labels_;
  std::vector<int> entries_;
  std::vector<int> symmetrizer_;
};

/// Checks the Cartan axioms and computes the minimal symmetrizer.
/// Throws NotCartan or NotSymmetrizable.
CartanMatrix validate_cartan(std::vector<std::string> labels,
                             const std::vector<std::vector<int>> &entries);

/// Labels "1".."n".
CartanMatrix validate_cartan(const std::vector<std::vector<int>> &entries);

/// Standard finite-type Cartan matrix, labels "1".."rank".
/// B_n has c_{n-1,n} = -2, C_n is its transpose; E uses Bourbaki numbering.
/// Throws UnknownType.
CartanMatrix finite_type_cartan(char type, int rank);

/// Involution i -> i* of the index set.
class DynkinInvolution {
public:
  explicit DynkinInvolution(std::vector<Color> map);
  static DynkinInvolution identity(std::size_t n);

  Color operator()(Color i) const { return map_[i]; }
  std::size_t size() const { return map_.size(); }
  const std::vector<Color> &map() const { return map_; }

  bool operator==(const DynkinInvolution &) const = default;

private:
  std::vector<Color> map_;
};

/// The involution induced by -w0 on a finite type; identity outside A/D/E6.
DynkinInvolution standard_involution(char type, int rank);

bool is_diagram_automorphism(const CartanMatrix &c, const DynkinInvolution &star);

} // namespace iboxes
