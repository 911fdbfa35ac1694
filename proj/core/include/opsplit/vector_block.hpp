#pragma once

#include <Eigen/Core>

#include <vector>

#include "opsplit/errors.hpp"

namespace opsplit {

// Real coordinate vector partitioned into consecutive blocks: one primal
// block followed by any number of dual blocks. Solvers use it as combined
// iterate state; the flat data view makes joint norms cheap.
class VectorBlock {
 public:
  VectorBlock(Eigen::VectorXd data, std::vector<Eigen::Index> block_sizes);

  static VectorBlock zeros(const std::vector<Eigen::Index>& block_sizes);

  const Eigen::VectorXd& data() const { return data_; }
  Eigen::VectorXd& data() { return data_; }

  Eigen::Index size() const { return data_.size(); }
  Eigen::Index block_count() const { return static_cast<Eigen::Index>(sizes_.size()); }
  Eigen::Index block_size(Eigen::Index i) const { return sizes_[static_cast<std::size_t>(i)]; }
  const std::vector<Eigen::Index>& block_sizes() const { return sizes_; }

  Eigen::Ref<Eigen::VectorXd> block(Eigen::Index i);
  Eigen::Ref<const Eigen::VectorXd> block(Eigen::Index i) const;

  bool all_finite() const { return data_.allFinite(); }

  // Throws ContractViolation if any coordinate is NaN/Inf.
  void require_finite(const char* where) const;

 private:
  Eigen::Index offset_of(Eigen::Index i) const;

  Eigen::VectorXd data_;
  std::vector<Eigen::Index> sizes_;
  std::vector<Eigen::Index> offsets_;
};

}  // namespace opsplit
