#pragma once

#include "cogail/nn/adam.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace cogail::nn {

inline constexpr std::uint32_t kArchiveVersion = 1;

// Versioned binary container of named matrices plus a JSON metadata block.
//
// Layout (native little-endian):
//   "COGAILCK" | u32 version | u64 meta_len | meta (compact JSON)
//   | u32 n_tensors | n x (u32 name_len | name | u64 rows | u64 cols | f64[rows*cols], column-major)
//   | u32 crc32 of all preceding bytes
//
// Tensors are stored in name order, so save(load(bytes)) == bytes.
class Archive {
 public:
  nlohmann::json meta = nlohmann::json::object();

  void put(const std::string& name, const Matrix& m) { tensors_[name] = m; }
  const Matrix& get(const std::string& name) const;
  bool contains(const std::string& name) const { return tensors_.count(name) != 0; }
  const std::map<std::string, Matrix>& tensors() const { return tensors_; }

  void put_parameters(const std::string& prefix, const std::vector<const Parameter*>& params);
  // Shapes must match the stored tensors.
  void get_parameters(const std::string& prefix, const std::vector<Parameter*>& params) const;
  void put_adam(const std::string& prefix, const Adam& adam);
  void get_adam(const std::string& prefix, Adam& adam) const;

  std::string serialize() const;
  static Archive deserialize(std::string_view bytes);

  void save(const std::filesystem::path& path) const;
  static Archive load(const std::filesystem::path& path);

 private:
  std::map<std::string, Matrix> tensors_;
};

}  // namespace cogail::nn
