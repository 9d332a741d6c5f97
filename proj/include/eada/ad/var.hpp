#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "eada/core/tensor.hpp"

namespace eada::ad {

/// One vertex of a backward graph. Nodes own their parents, so a graph is kept
/// alive by any handle to its output and freed when the last handle drops.
template <typename T>
struct Node {
    std::shared_ptr<Tensor<T>> value;
    std::shared_ptr<Tensor<T>> grad;  // allocated iff requires_grad
    bool requires_grad = false;
    std::vector<std::shared_ptr<Node<T>>> parents;
    std::function<void()> backprop;  // accumulates this->grad into parents' grads
};

/// Value handle used by all differentiable ops. Copies share the node.
template <typename T>
class Var {
  public:
    Var() = default;
    explicit Var(std::shared_ptr<Node<T>> n) : node_(std::move(n)) {}

    /// Leaf with no gradient (data batches, masks, targets).
    static Var constant(Tensor<T> v) {
        auto n = std::make_shared<Node<T>>();
        n->value = std::make_shared<Tensor<T>>(std::move(v));
        return Var(n);
    }

    /// Leaf over external storage; `grad` must match the value shape when trainable.
    static Var leaf(std::shared_ptr<Tensor<T>> value, std::shared_ptr<Tensor<T>> grad,
                    bool requires_grad) {
        auto n = std::make_shared<Node<T>>();
        n->value = std::move(value);
        n->requires_grad = requires_grad;
        if (requires_grad) {
            if (!grad || !grad->same_shape(*n->value))
                throw std::invalid_argument("leaf: grad buffer missing or mis-shaped");
            n->grad = std::move(grad);
        }
        return Var(n);
    }

    /// Shares the value but cuts the graph: gradients never flow past a detach.
    Var detach() const {
        auto n = std::make_shared<Node<T>>();
        n->value = node_->value;
        return Var(n);
    }

    bool defined() const { return static_cast<bool>(node_); }
    const Tensor<T>& val() const { return *node_->value; }
    Tensor<T>& grad() const { return *node_->grad; }
    bool requires_grad() const { return node_ && node_->requires_grad; }
    const std::shared_ptr<Node<T>>& node() const { return node_; }

  private:
    std::shared_ptr<Node<T>> node_;
};

/// Trainable tensor: persistent value/grad storage shared with graph leaves.
template <typename T>
struct Param {
    std::string name;
    std::shared_ptr<Tensor<T>> value;
    std::shared_ptr<Tensor<T>> grad;

    Param() = default;
    Param(std::string n, Tensor<T> init)
        : name(std::move(n)),
          value(std::make_shared<Tensor<T>>(std::move(init))),
          grad(std::make_shared<Tensor<T>>(value->shape())) {}

    /// Graph leaf; pass trainable=false to freeze this parameter for a substep.
    Var<T> var(bool trainable = true) const { return Var<T>::leaf(value, grad, trainable); }
    void zero_grad() { grad->fill(T(0)); }
    int64_t numel() const { return value->numel(); }
};

/// Runs reverse-mode accumulation from `root`. The root gradient is seeded with
/// `seed` when given (shape must match) and with ones otherwise. Each graph is
/// single-use: running backward twice double-counts.
template <typename T>
void backward(const Var<T>& root, const Tensor<T>* seed = nullptr) {
    if (!root.requires_grad())
        throw std::invalid_argument("backward: root does not require gradients");

    // Iterative postorder DFS over requires_grad parents; reverse postorder is a
    // topological order with every consumer before its producers.
    std::vector<Node<T>*> order;
    std::unordered_set<Node<T>*> seen;
    std::vector<std::pair<Node<T>*, size_t>> stack;
    stack.emplace_back(root.node().get(), 0);
    seen.insert(root.node().get());
    while (!stack.empty()) {
        auto& [n, i] = stack.back();
        if (i < n->parents.size()) {
            Node<T>* p = n->parents[i++].get();
            if (p->requires_grad && !seen.count(p)) {
                seen.insert(p);
                stack.emplace_back(p, 0);
            }
        } else {
            order.push_back(n);
            stack.pop_back();
        }
    }

    Tensor<T>& g = root.grad();
    if (seed) {
        if (!seed->same_shape(g)) throw std::invalid_argument("backward: seed shape mismatch");
        g = *seed;
    } else {
        g.fill(T(1));
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if ((*it)->backprop) (*it)->backprop();
}

}  // namespace eada::ad
