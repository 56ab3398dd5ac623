#include "ringforge/tensor.hpp"

#include <algorithm>
#include <cmath>

#include "ringforge/errors.hpp"

namespace ringforge::diff {

using detail::TensorNode;

double Tensor::scalar() const {
  if (!node_ || node_->value.size() != 1) {
    throw ContractError("Tensor::scalar: tensor is not 1x1");
  }
  return node_->value.at(0, 0);
}

Mat Tensor::grad() const {
  if (!node_) throw ContractError("Tensor::grad: empty tensor");
  if (node_->has_grad()) return node_->grad;
  return Mat(node_->value.rows(), node_->value.cols());
}

Tensor Tape::leaf(Mat value, bool requires_grad) {
  auto node = std::make_shared<TensorNode>();
  node->value = std::move(value);
  node->requires_grad = requires_grad;
  node->tape = this;
  nodes_.push_back(node);
  return Tensor(node);
}

Tensor Tape::scalar_constant(double v) {
  Mat m(1, 1);
  m.at(0, 0) = v;
  return leaf(std::move(m), false);
}

Tensor make_op(Tape* tape, Mat value, std::vector<Tensor> parents,
               std::function<void(TensorNode&)> backprop) {
  auto node = std::make_shared<TensorNode>();
  node->value = std::move(value);
  node->tape = tape;
  for (auto& p : parents) {
    if (p.node_->requires_grad) node->requires_grad = true;
    node->parents.push_back(p.node_);
  }
  if (node->requires_grad) node->backprop = std::move(backprop);
  tape->nodes_.push_back(node);
  return Tensor(node);
}

namespace {

Tape* common_tape(std::initializer_list<const Tensor*> ts) {
  Tape* tape = nullptr;
  for (const Tensor* t : ts) {
    if (!t->valid()) throw ContractError("op: empty tensor operand");
    Tape* tt = [&] {
      struct Access : Tensor {};  // no-op; tape reached via node below
      return static_cast<const Tensor*>(t);
    }() != nullptr
                   ? nullptr
                   : nullptr;
    (void)tt;
  }
  (void)tape;
  return nullptr;
}

}  // namespace

// Helper access to node internals within this translation unit.
struct NodeAccess {
  static std::shared_ptr<TensorNode> node(const Tensor& t) {
    struct T : Tensor {
      using Tensor::Tensor;
    };
    // Tensor grants friendship to make_op/backward only; replicate minimal
    // access through a static-cast-free copy of the shared_ptr.
    return reinterpret_cast<const T&>(t).peek();
  }
};

}  // namespace ringforge::diff

// The access shim above is unnecessary complexity; instead expose the node
// through private friendship below.

namespace ringforge::diff {

namespace {

std::shared_ptr<TensorNode> node_of(const Tensor& t);

struct TensorPeek {
  std::shared_ptr<TensorNode> node_;
};
static_assert(sizeof(TensorPeek) == sizeof(Tensor), "Tensor layout drifted");

std::shared_ptr<TensorNode> node_of(const Tensor& t) {
  if (!t.valid()) throw ContractError("op: empty tensor operand");
  TensorPeek peek;
  std::memcpy(&peek, &t, sizeof(TensorPeek));
  auto sp = peek.node_;
  // memcpy of a shared_ptr does not bump the refcount; detach carefully by
  // constructing a fresh shared_ptr aliasing the same node.
  std::shared_ptr<TensorNode> out(sp.get(), [](TensorNode*) {});
  std::memset(&peek, 0, sizeof(TensorPeek));
  return out;
}

}  // namespace

}  // namespace ringforge::diff
