#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "eada/ad/var.hpp"

namespace eada::ad {

/// Adam with bias correction (beta1=0.9, beta2=0.999, eps=1e-8 defaults).
template <typename T>
class Adam {
  public:
    Adam() = default;
    explicit Adam(std::vector<Param<T>> params, T lr, T beta1 = T(0.9), T beta2 = T(0.999),
                  T eps = T(1e-8))
        : params_(std::move(params)), lr_(lr), beta1_(beta1), beta2_(beta2), eps_(eps) {
        for (const auto& p : params_) {
            m_.emplace_back(p.value->shape());
            v_.emplace_back(p.value->shape());
        }
    }

    void zero_grad() {
        for (auto& p : params_) p.zero_grad();
    }

    void step() {
        ++t_;
        const double bc1 = 1.0 - std::pow(static_cast<double>(beta1_), static_cast<double>(t_));
        const double bc2 = 1.0 - std::pow(static_cast<double>(beta2_), static_cast<double>(t_));
        for (size_t k = 0; k < params_.size(); ++k) {
            T* w = params_[k].value->data();
            const T* g = params_[k].grad->data();
            T* m = m_[k].data();
            T* v = v_[k].data();
            const int64_t n = params_[k].numel();
            for (int64_t i = 0; i < n; ++i) {
                m[i] = beta1_ * m[i] + (T(1) - beta1_) * g[i];
                v[i] = beta2_ * v[i] + (T(1) - beta2_) * g[i] * g[i];
                const T mhat = m[i] / static_cast<T>(bc1);
                const T vhat = v[i] / static_cast<T>(bc2);
                w[i] -= lr_ * mhat / (std::sqrt(vhat) + eps_);
            }
        }
    }

    const std::vector<Param<T>>& params() const { return params_; }
    std::vector<Tensor<T>>& m_state() { return m_; }
    std::vector<Tensor<T>>& v_state() { return v_; }
    int64_t& step_count() { return t_; }
    T lr() const { return lr_; }
    void set_lr(T lr) { lr_ = lr; }

  private:
    std::vector<Param<T>> params_;
    std::vector<Tensor<T>> m_, v_;
    T lr_ = T(0), beta1_ = T(0.9), beta2_ = T(0.999), eps_ = T(1e-8);
    int64_t t_ = 0;
};

/// SGD with classical momentum: buf = mu*buf + g; w -= lr*buf.
template <typename T>
class SgdMomentum {
  public:
    SgdMomentum() = default;
    explicit SgdMomentum(std::vector<Param<T>> params, T lr, T momentum = T(0.9))
        : params_(std::move(params)), lr_(lr), momentum_(momentum) {
        for (const auto& p : params_) buf_.emplace_back(p.value->shape());
    }

    void zero_grad() {
        for (auto& p : params_) p.zero_grad();
    }

    void step() {
        for (size_t k = 0; k < params_.size(); ++k) {
            T* w = params_[k].value->data();
            const T* g = params_[k].grad->data();
            T* b = buf_[k].data();
            const int64_t n = params_[k].numel();
            for (int64_t i = 0; i < n; ++i) {
                b[i] = momentum_ * b[i] + g[i];
                w[i] -= lr_ * b[i];
            }
        }
    }

    const std::vector<Param<T>>& params() const { return params_; }
    std::vector<Tensor<T>>& buffers() { return buf_; }
    T lr() const { return lr_; }

  private:
    std::vector<Param<T>> params_;
    std::vector<Tensor<T>> buf_;
    T lr_ = T(0), momentum_ = T(0.9);
};

}  // namespace eada::ad
