#pragma once

#include <vector>

namespace orchard {

/// A bijection of {0,...,n-1}.
class Permutation {
public:
    /// Validates that images is a bijection.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    static Permutation transposition(int n, int i, int j);
    /// The n-cycle 0 -> 1 -> ... -> n-1 -> 0.
    static Permutation cycle(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }

    Permutation inverse() const;
    /// Composition (g.compose(h))(x) = g(h(x)).
    Permutation compose(const Permutation& other) const;

    /// Sign of the permutation: +1 even, -1 odd.
    int sign() const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images_ == b.images_;
    }

private:
    std::vector<int> images_;
};

}  // namespace orchard
