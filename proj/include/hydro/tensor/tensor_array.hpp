#pragma once

#include "hydro/errors.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hydro {

/// Cubic array of rank r with every index in 0..n-1, stored row-major.
template <class T>
class Tensor {
  public:
    Tensor() = default;
    Tensor(int n, int rank, const T& fill) : n_(n), rank_(rank) {
        std::size_t size = 1;
        for (int k = 0; k < rank; ++k)
            size *= static_cast<std::size_t>(n);
        data_.assign(size, fill);
    }

    int n() const { return n_; }
    int rank() const { return rank_; }
    std::size_t size() const { return data_.size(); }

    template <class... I>
    T& operator()(I... idx) {
        return data_[offset(idx...)];
    }
    template <class... I>
    const T& operator()(I... idx) const {
        return data_[offset(idx...)];
    }

    T& flat(std::size_t k) { return data_[k]; }
    const T& flat(std::size_t k) const { return data_[k]; }

    /// Index tuple of a flat position.
    std::vector<int> unflatten(std::size_t k) const {
        std::vector<int> idx(static_cast<std::size_t>(rank_));
        for (int r = rank_; r-- > 0;) {
            idx[static_cast<std::size_t>(r)] = static_cast<int>(k % static_cast<std::size_t>(n_));
            k /= static_cast<std::size_t>(n_);
        }
        return idx;
    }

    /// First position in lexicographic index order whose entry is nonzero.
    std::optional<std::size_t> first_nonzero() const {
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!data_[k].is_zero())
                return k;
        return std::nullopt;
    }

    friend bool operator==(const Tensor& a, const Tensor& b) {
        return a.n_ == b.n_ && a.rank_ == b.rank_ && a.data_ == b.data_;
    }

  private:
    template <class... I>
    std::size_t offset(I... idx) const {
        static_assert(sizeof...(I) > 0);
        if (static_cast<int>(sizeof...(I)) != rank_)
            throw DimensionMismatch("tensor index of wrong rank");
        std::size_t off = 0;
        ((off = off * static_cast<std::size_t>(n_) + static_cast<std::size_t>(idx)), ...);
        return off;
    }
    int n_ = 0;
    int rank_ = 0;
    std::vector<T> data_;
};

} // namespace hydro
