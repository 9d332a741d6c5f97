#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace eada {

/// Dense row-major tensor. Shapes are small, data is contiguous.
template <typename T>
class Tensor {
  public:
    Tensor() = default;

    explicit Tensor(std::vector<int64_t> shape) : shape_(std::move(shape)) {
        data_.assign(static_cast<size_t>(numel_of(shape_)), T(0));
    }

    Tensor(std::initializer_list<int64_t> shape) : Tensor(std::vector<int64_t>(shape)) {}

    static Tensor full(std::vector<int64_t> shape, T value) {
        Tensor t(std::move(shape));
        std::fill(t.data_.begin(), t.data_.end(), value);
        return t;
    }

    static Tensor from_data(std::vector<int64_t> shape, std::vector<T> data) {
        if (numel_of(shape) != static_cast<int64_t>(data.size()))
            throw std::invalid_argument("Tensor::from_data: shape does not match data size");
        Tensor t;
        t.shape_ = std::move(shape);
        t.data_ = std::move(data);
        return t;
    }

    const std::vector<int64_t>& shape() const { return shape_; }
    int64_t dim(size_t i) const { return shape_.at(i); }
    size_t rank() const { return shape_.size(); }
    int64_t numel() const { return static_cast<int64_t>(data_.size()); }
    bool empty() const { return data_.empty(); }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }
    T& operator[](size_t i) { return data_[i]; }
    const T& operator[](size_t i) const { return data_[i]; }

    std::vector<T>& vec() { return data_; }
    const std::vector<T>& vec() const { return data_; }

    /// Same data, new shape. Element count must match.
    Tensor reshaped(std::vector<int64_t> shape) const {
        if (numel_of(shape) != numel())
            throw std::invalid_argument("Tensor::reshaped: element count mismatch");
        Tensor t;
        t.shape_ = std::move(shape);
        t.data_ = data_;
        return t;
    }

    void fill(T value) { std::fill(data_.begin(), data_.end(), value); }

    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

    static int64_t numel_of(const std::vector<int64_t>& shape) {
        int64_t n = 1;
        for (int64_t d : shape) {
            if (d < 0) throw std::invalid_argument("Tensor: negative dimension");
            n *= d;
        }
        return n;
    }

    std::string shape_str() const {
        std::string s = "(";
        for (size_t i = 0; i < shape_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(shape_[i]);
        }
        return s + ")";
    }

  private:
    std::vector<int64_t> shape_;
    std::vector<T> data_;
};

template <typename T>
void check_shape(const Tensor<T>& t, const std::vector<int64_t>& expect, const char* what) {
    if (t.shape() != expect) {
        std::string msg = std::string(what) + ": expected shape (";
        for (size_t i = 0; i < expect.size(); ++i) {
            if (i) msg += ",";
            msg += std::to_string(expect[i]);
        }
        msg += "), got " + t.shape_str();
        throw std::invalid_argument(msg);
    }
}

}  // namespace eada
