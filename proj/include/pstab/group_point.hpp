#pragma once

#include <vector>

#include "pstab/matrix.hpp"

namespace pstab {

enum class Group { GL, SL };
enum class Kind { GroupTuple, LieTuple };

std::string_view group_name(Group g);
std::string_view kind_name(Kind k);

/// A point of G^N (simultaneous conjugation) or of the N-fold adjoint module
/// M_n^N: an ordered tuple of square matrices plus group and kind tags.
/// Group tuples must be invertible, det 1 under SL. Lie tuples live in all of
/// M_n for both groups (conjugation preserves it either way).
class GroupPoint {
 public:
  GroupPoint(Group g, Kind k, std::vector<Matrix> mats);

  Group group() const { return group_; }
  Kind kind() const { return kind_; }
  size_t n() const { return n_; }
  size_t count() const { return mats_.size(); }
  Field field() const { return mats_.front().field(); }
  const std::vector<Matrix>& mats() const { return mats_; }
  const Matrix& mat(size_t i) const { return mats_[i]; }

  bool operator==(const GroupPoint& o) const {
    return group_ == o.group_ && kind_ == o.kind_ && mats_ == o.mats_;
  }

  GroupPoint conjugated_by(const Matrix& g) const;
  GroupPoint concat(const GroupPoint& other) const;
  GroupPoint lifted() const;

 private:
  Group group_;
  Kind kind_;
  size_t n_;
  std::vector<Matrix> mats_;
};

}  // namespace pstab
