#pragma once

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <vector>

namespace cogail::nn {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// A trainable tensor. Gradients accumulate into `grad` on Tape::backward.
struct Parameter {
  std::string name;
  Matrix value;
  Matrix grad;

  Parameter() = default;
  Parameter(std::string n, Matrix v)
      : name(std::move(n)), value(std::move(v)),
        grad(Matrix::Zero(value.rows(), value.cols())) {}

  void zero_grad() { grad.setZero(value.rows(), value.cols()); }
};

class Tape;

// Handle to a node recorded on a Tape. Cheap to copy.
struct Var {
  Tape* tape = nullptr;
  int id = -1;

  const Matrix& value() const;
  Eigen::Index rows() const { return value().rows(); }
  Eigen::Index cols() const { return value().cols(); }
  double scalar() const;
};

// Reverse-mode recorder over dense matrices. Batches are laid out as
// columns (features x batch). One tape per loss evaluation.
class Tape {
 public:
  using Backprop = std::function<void(Tape&, int self)>;

  Var constant(Matrix value);
  Var parameter(Parameter& p);

  // Records a derived node. `backprop` reads grad(self) and accumulates
  // into the parents' gradients.
  Var record(Matrix value, Backprop backprop);

  // Seeds d(loss)/d(loss) = 1 and propagates. Parameters reached by the
  // loss accumulate into Parameter::grad; others are left untouched.
  void backward(Var loss);

  const Matrix& value(int id) const { return nodes_[id].value; }
  Matrix& grad(int id);
  bool has_grad(int id) const { return nodes_[id].grad_live; }
  std::size_t size() const { return nodes_.size(); }

 private:
  struct Node {
    Matrix value;
    Matrix grad;
    bool grad_live = false;
    Backprop backprop;
    Parameter* param = nullptr;
  };
  std::vector<Node> nodes_;
};

// Elementwise and linear-algebra ops. Shapes follow Eigen conventions;
// `add`/`sub` broadcast a column vector (m x 1) across an m x n operand
// and a 1 x 1 scalar across anything.
Var matmul(Var a, Var b);
Var add(Var a, Var b);
Var sub(Var a, Var b);
Var mul(Var a, Var b);
Var scale(Var a, double s);
Var add_scalar(Var a, double s);
Var neg(Var a);
Var tanh(Var a);
Var sigmoid(Var a);
Var exp(Var a);
Var log(Var a);
Var softplus(Var a);
Var square(Var a);
Var sum(Var a);
Var mean(Var a);
// Sum over rows, giving 1 x cols.
Var sum_rows(Var a);
// Euclidean norm of every column, giving 1 x cols.
Var column_norm(Var a);
Var slice_rows(Var a, Eigen::Index start, Eigen::Index count);
Var concat_rows(Var a, Var b);
// Values outside [lo, hi] are clamped and receive zero gradient.
Var clamp(Var a, double lo, double hi);
// Elementwise minimum; gradient routed to the smaller operand (ties to a).
Var minimum(Var a, Var b);

inline Var operator+(Var a, Var b) { return add(a, b); }
inline Var operator-(Var a, Var b) { return sub(a, b); }
inline Var operator*(double s, Var a) { return scale(a, s); }

}  // namespace cogail::nn
