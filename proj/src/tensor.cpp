#include "nambu/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "nambu/errors.hpp"

namespace nambu {

namespace {

std::string idx_str(std::span<const std::size_t> idx) {
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(idx[i]);
    }
    return s + ")";
}

// Parity of a permutation given as a vector (destroyed in the process).
int permutation_sign(std::vector<std::size_t> perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        while (perm[i] != i) {
            std::swap(perm[i], perm[perm[i]]);
            sign = -sign;
        }
    }
    return sign;
}

}  // namespace

Tensor::Tensor(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    std::size_t n = 1;
    for (std::size_t d : dims_) n *= d;
    entries_.assign(n, Rational(0));
}

std::size_t Tensor::offset(std::span<const std::size_t> idx) const {
    if (idx.size() != dims_.size())
        throw ShapeError("tensor index rank " + std::to_string(idx.size()) +
                         " != tensor rank " + std::to_string(dims_.size()));
    std::size_t off = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= dims_[i])
            throw BoundsError("tensor index " + idx_str(idx) +
                              " out of bounds at axis " + std::to_string(i));
        off = off * dims_[i] + idx[i];
    }
    return off;
}

const Rational& Tensor::at(std::span<const std::size_t> idx) const {
    return entries_[offset(idx)];
}

Rational& Tensor::at(std::span<const std::size_t> idx) {
    return entries_[offset(idx)];
}

const Rational& Tensor::at(std::initializer_list<std::size_t> idx) const {
    return at(std::span<const std::size_t>(idx.begin(), idx.size()));
}

Rational& Tensor::at(std::initializer_list<std::size_t> idx) {
    return at(std::span<const std::size_t>(idx.begin(), idx.size()));
}

Tensor Tensor::antisymmetrized(std::vector<std::size_t> axes) const {
    std::sort(axes.begin(), axes.end());
    axes.erase(std::unique(axes.begin(), axes.end()), axes.end());
    for (std::size_t ax : axes) {
        if (ax >= rank()) throw BoundsError("antisymmetrize: axis out of range");
        if (dims_[ax] != dims_[axes[0]])
            throw ShapeError("antisymmetrize: unequal axis extents");
    }
    if (axes.size() < 2) return *this;

    const std::size_t m = axes.size();
    Integer fact = 1;
    for (std::size_t i = 2; i <= m; ++i) fact *= i;
    const Rational inv_fact(Integer(1), fact);

    Tensor out(dims_);
    std::vector<std::size_t> idx(rank(), 0), src(rank(), 0);
    std::vector<std::size_t> perm(m);
    for (std::size_t flat = 0; flat < entries_.size(); ++flat) {
        // decode flat offset
        std::size_t rem = flat;
        for (std::size_t i = rank(); i-- > 0;) {
            idx[i] = rem % dims_[i];
            rem /= dims_[i];
        }
        std::iota(perm.begin(), perm.end(), 0);
        Rational acc(0);
        do {
            src = idx;
            for (std::size_t i = 0; i < m; ++i) src[axes[i]] = idx[axes[perm[i]]];
            std::vector<std::size_t> p = perm;
            acc += Rational(permutation_sign(std::move(p))) * at(src);
        } while (std::next_permutation(perm.begin(), perm.end()));
        out.entries_[flat] = acc * inv_fact;
    }
    return out;
}

bool Tensor::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rational& r) { return r == 0; });
}

}  // namespace nambu
