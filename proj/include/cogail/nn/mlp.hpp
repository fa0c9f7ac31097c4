#pragma once

#include "cogail/nn/tape.hpp"

#include <random>
#include <vector>

namespace cogail::nn {

using Rng = std::mt19937_64;

enum class Activation { kTanh, kIdentity };

struct Layer {
  Parameter weight;  // out x in
  Parameter bias;    // out x 1
  Activation activation = Activation::kTanh;
};

struct InitSpec {
  double hidden_gain = 1.4142135623730951;
  double output_gain = 1.0;
};

// Fully connected network. `sizes` lists input, hidden..., output widths.
class Mlp {
 public:
  Mlp() = default;
  Mlp(const std::vector<int>& sizes, Activation hidden, Activation output,
      InitSpec init, Rng& rng, const std::string& name = "mlp");

  int input_size() const;
  int output_size() const;

  // x is input_size x batch.
  Var forward(Tape& tape, Var x);
  Matrix infer(const Matrix& x) const;
  Vector infer(const Vector& x) const;

  std::vector<Parameter*> parameters();
  std::vector<const Parameter*> parameters() const;
  std::vector<Layer>& layers() { return layers_; }
  const std::vector<Layer>& layers() const { return layers_; }

  // Zeroes the last layer's weights and bias.
  void zero_output_layer();

 private:
  std::vector<Layer> layers_;
};

// Orthogonal init scaled by `gain` (rows x cols, any aspect ratio).
Matrix orthogonal(Eigen::Index rows, Eigen::Index cols, double gain, Rng& rng);

}  // namespace cogail::nn
