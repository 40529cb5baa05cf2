#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace bcpa {

// Dense row-major N-dimensional array.
template <typename T>
class NdArray {
public:
    NdArray() = default;

    explicit NdArray(std::vector<int> dims, const T& fill = T{}) : dims_(std::move(dims)) {
        std::size_t n = 1;
        strides_.resize(dims_.size());
        for (int a = static_cast<int>(dims_.size()) - 1; a >= 0; --a) {
            assert(dims_[static_cast<std::size_t>(a)] > 0);
            strides_[static_cast<std::size_t>(a)] = n;
            n *= static_cast<std::size_t>(dims_[static_cast<std::size_t>(a)]);
        }
        data_.assign(n, fill);
    }

    int rank() const { return static_cast<int>(dims_.size()); }
    const std::vector<int>& dims() const { return dims_; }
    std::size_t size() const { return data_.size(); }
    std::span<const std::size_t> strides() const { return strides_; }

    std::size_t flat(std::span<const int> idx) const {
        assert(idx.size() == dims_.size());
        std::size_t f = 0;
        for (std::size_t a = 0; a < idx.size(); ++a) {
            assert(idx[a] >= 0 && idx[a] < dims_[a]);
            f += strides_[a] * static_cast<std::size_t>(idx[a]);
        }
        return f;
    }

    T& operator[](std::size_t f) { return data_[f]; }
    const T& operator[](std::size_t f) const { return data_[f]; }
    T& at(std::span<const int> idx) { return data_[flat(idx)]; }
    const T& at(std::span<const int> idx) const { return data_[flat(idx)]; }

    std::span<T> data() { return data_; }
    std::span<const T> data() const { return data_; }

    friend bool operator==(const NdArray&, const NdArray&) = default;

private:
    std::vector<int> dims_;
    std::vector<std::size_t> strides_;
    std::vector<T> data_;
};

// Row-major odometer step over an index vector; returns false after
// wrapping back to all zeros (i.e. once every index has been visited).
inline bool next_index(std::span<const int> dims, std::span<int> idx) {
    for (int a = static_cast<int>(dims.size()) - 1; a >= 0; --a) {
        const auto ua = static_cast<std::size_t>(a);
        if (++idx[ua] < dims[ua]) return true;
        idx[ua] = 0;
    }
    return false;
}

}  // namespace bcpa
