#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ringforge/mat.hpp"

namespace ringforge::diff {

class Tape;

namespace detail {

struct TensorNode {
  Mat value;
  Mat grad;  // allocated lazily, same shape as value
  bool requires_grad = false;
  std::vector<std::shared_ptr<TensorNode>> parents;
  std::function<void(TensorNode&)> backprop;  // reads grad, accumulates into parents
  Tape* tape = nullptr;

  void ensure_grad() {
    if (grad.rows() != value.rows() || grad.cols() != value.cols()) {
      grad = Mat(value.rows(), value.cols());
    }
  }
  bool has_grad() const { return grad.size() == value.size() && value.size() > 0; }
};

}  // namespace detail

/// Handle to a node in the computation graph. Values are dense row-major
/// double matrices; scalars are 1x1. Copying a Tensor copies the handle.
class Tensor {
 public:
  Tensor() = default;

  std::size_t rows() const { return node_->value.rows(); }
  std::size_t cols() const { return node_->value.cols(); }
  const Mat& value() const { return node_->value; }
  double scalar() const;
  bool requires_grad() const { return node_ && node_->requires_grad; }

  /// Accumulated adjoint after backward(); zeros if never reached.
  Mat grad() const;

  bool valid() const { return node_ != nullptr; }

 private:
  friend class Tape;
  friend void backward(const Tensor&);
  friend Tensor make_op(Tape* tape, Mat value, std::vector<Tensor> parents,
                        std::function<void(detail::TensorNode&)> backprop);
  explicit Tensor(std::shared_ptr<detail::TensorNode> node) : node_(std::move(node)) {}
  std::shared_ptr<detail::TensorNode> node_;
};

/// Records the operation graph. Nodes are appended in creation order, which
/// is a valid topological order, so the backward sweep is a reverse scan.
/// A tape is single-threaded; independent tapes may run concurrently.
class Tape {
 public:
  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  /// A differentiable leaf (parameter) or a non-differentiable input.
  Tensor leaf(Mat value, bool requires_grad = true);
  Tensor constant(Mat value) { return leaf(std::move(value), false); }
  Tensor scalar_constant(double v);

  std::size_t size() const { return nodes_.size(); }

 private:
  friend void backward(const Tensor&);
  friend Tensor make_op(Tape* tape, Mat value, std::vector<Tensor> parents,
                        std::function<void(detail::TensorNode&)> backprop);
  std::vector<std::shared_ptr<detail::TensorNode>> nodes_;
};

// ---- primitive operations (each registers its adjoint rule) ----

Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);  // elementwise
Tensor scale(const Tensor& a, double s);
/// Adds a 1 x cols row vector to every row of a.
Tensor add_rowvec(const Tensor& a, const Tensor& row);
Tensor matmul(const Tensor& a, const Tensor& b);
Tensor transpose(const Tensor& a);
Tensor relu(const Tensor& a);
Tensor exp(const Tensor& a);
/// Elementwise natural log; throws NumericsError on non-positive input.
Tensor log(const Tensor& a);
Tensor sum(const Tensor& a);       // 1x1
Tensor mean(const Tensor& a);      // 1x1
Tensor row_sum(const Tensor& a);   // n x 1
Tensor diag(const Tensor& a);      // square n x n -> n x 1
/// Row r of the result is the sum of input rows listed in lists[r]; an empty
/// list yields a zero row. Covers neighborhood aggregation and pooling.
Tensor gather_sum(const Tensor& a, const std::vector<std::vector<std::uint32_t>>& lists);
/// Vertical concatenation.
Tensor vcat(const std::vector<Tensor>& parts);
/// Divides each row by its L2 norm; all-zero rows pass through unchanged.
Tensor l2_normalize_rows(const Tensor& a);

/// Reverse sweep from a scalar loss; accumulates adjoints on every
/// requires_grad node reachable from it. ContractError if the loss is not
/// scalar or has no live tape.
void backward(const Tensor& loss);

/// Ordered parameter collection (plain values, bound into tapes per pass).
using Params = std::map<std::string, Mat>;

/// Max over coordinates of |analytic - central difference| / max(1, |cd|)
/// for a scalar function of one matrix input. NumericsError on non-finite
/// values.
double finite_diff_check(const std::function<Tensor(Tape&, const Tensor&)>& f, const Mat& x,
                         double h);

struct GradCheckReport {
  double max_rel_err = 0.0;
  std::string worst_param;
};

/// Same check across a whole parameter collection: build_loss must bind
/// every parameter from the map into the tape it is given and return the
/// scalar loss.
GradCheckReport finite_diff_check_params(
    const std::function<Tensor(Tape&, const std::map<std::string, Tensor>&)>& build_loss,
    const Params& params, double h);

}  // namespace ringforge::diff
