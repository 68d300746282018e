#include "orchard/permutation.hpp"

#include <stdexcept>

namespace orchard {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Permutation: images are not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i;
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int i, int j) {
    Permutation p = identity(n);
    std::swap(p.images_[static_cast<std::size_t>(i)], p.images_[static_cast<std::size_t>(j)]);
    return p;
}

Permutation Permutation::cycle(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = (i + 1) % n;
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < size(); ++i) im[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(im));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size()) throw std::invalid_argument("Permutation::compose: size mismatch");
    std::vector<int> im(images_.size());
    for (int i = 0; i < size(); ++i) im[static_cast<std::size_t>(i)] = (*this)(other(i));
    return Permutation(std::move(im));
}

int Permutation::sign() const {
    std::vector<bool> seen(images_.size(), false);
    int parity = 0;
    for (int i = 0; i < size(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
            seen[static_cast<std::size_t>(j)] = true;
            ++len;
        }
        parity ^= (len - 1) & 1;
    }
    return parity ? -1 : +1;
}

}  // namespace orchard
