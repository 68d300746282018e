#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "orchard/bitvec.hpp"
#include "orchard/permutation.hpp"

namespace orchard {

/// Symmetry type of a sign function: symmetric functions are invariant
/// under argument transpositions, antisymmetric ones change sign.
enum class SymmetryKind { Symmetric, Antisymmetric };

inline int kind_sign(SymmetryKind k) { return k == SymmetryKind::Symmetric ? +1 : -1; }

/// Antisymmetric * Antisymmetric = Symmetric, etc.
inline SymmetryKind kind_product(SymmetryKind a, SymmetryKind b) {
    return a == b ? SymmetryKind::Symmetric
                  : SymmetryKind::Antisymmetric;
}

/// An element of the multiplicative group of symmetric or antisymmetric
/// {+1,-1}-valued functions on injective l-tuples from {0,...,n-1}.
/// Values are stored on the C(n,l) sorted l-subsets, one bit each
/// (bit set <=> value -1), indexed by colex rank; evaluation at an
/// arbitrary injective tuple applies the sorting parity for the
/// antisymmetric kind. Immutable after construction.
class SignFunction {
public:
    /// All-(+1) symmetric function, the group identity.
    static SignFunction identity(int ground_size, int arity);

    /// Validated constructor from an explicit table over sorted subsets.
    /// The table must assign +1 or -1 to every sorted l-subset, with no
    /// extra entries. Arity-1 functions are canonicalized to Symmetric.
    static SignFunction from_table(int ground_size, int arity, SymmetryKind kind,
                                   const std::map<std::vector<int>, int>& values);

    /// Unvalidated fast path from a packed bit table (bit <=> value -1)
    /// in colex rank order. Accepts arity == ground_size + 1 (an empty
    /// table): the degenerate function on an empty tuple set, needed for
    /// arity-2 cocycles over a single-element ground set.
    static SignFunction from_bits(int ground_size, int arity, SymmetryKind kind, BitVec bits);

    int ground_size() const { return n_; }
    int arity() const { return l_; }
    SymmetryKind kind() const { return kind_; }
    std::uint64_t table_size() const { return bits_.size(); }

    /// Value at the tuple, which must consist of arity() pairwise
    /// distinct indices below ground_size().
    int eval(std::span<const int> tuple) const;

    /// Value at a strictly increasing subset (no parity involved).
    int value_on_sorted(std::span<const int> sorted_subset) const;
    int value_at_rank(std::uint64_t colex_rank) const;

    bool is_identity() const { return kind_ == SymmetryKind::Symmetric && bits_.none(); }

    const BitVec& bits() const { return bits_; }

    /// One line per sorted subset in colex rank order: "i j k  +1".
    void dump(std::ostream& os) const;

    friend bool operator==(const SignFunction& a, const SignFunction& b) {
        return a.n_ == b.n_ && a.l_ == b.l_ && a.kind_ == b.kind_ && a.bits_ == b.bits_;
    }

private:
    SignFunction(int n, int l, SymmetryKind kind, BitVec bits);

    int n_ = 0;
    int l_ = 0;
    SymmetryKind kind_ = SymmetryKind::Symmetric;
    BitVec bits_;
};

/// Pointwise product; the kinds multiply.
SignFunction group_product(const SignFunction& a, const SignFunction& b);
inline SignFunction operator*(const SignFunction& a, const SignFunction& b) {
    return group_product(a, b);
}

/// Left action of Sym(n): (g.phi)(x_1,...,x_l) = phi(g^-1 x_1,...,g^-1 x_l).
SignFunction permute(const Permutation& g, const SignFunction& phi);

/// Negates the value on the single subset X (|X| = arity).
SignFunction flip(const SignFunction& phi, std::span<const int> subset);

}  // namespace orchard
