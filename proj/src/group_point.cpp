#include "pstab/group_point.hpp"

namespace pstab {

std::string_view group_name(Group g) { return g == Group::GL ? "GL" : "SL"; }
std::string_view kind_name(Kind k) { return k == Kind::GroupTuple ? "group" : "lie"; }

GroupPoint::GroupPoint(Group g, Kind k, std::vector<Matrix> mats)
    : group_(g), kind_(k), mats_(std::move(mats)) {
  if (mats_.empty()) fail(Errc::BadValue, "tuple must contain at least one matrix");
  n_ = mats_.front().n();
  Field f = mats_.front().field();
  for (size_t i = 0; i < mats_.size(); ++i) {
    const Matrix& m = mats_[i];
    std::string where = "matrices[" + std::to_string(i) + "]";
    if (!m.is_square()) fail(Errc::NotSquare, "tuple entry is not square", where);
    if (m.n() != n_) fail(Errc::SizeMismatch, "tuple entries have different sizes", where);
    if (m.field() != f) fail(Errc::FieldMismatch, "tuple entries have different field tags", where);
    if (kind_ == Kind::GroupTuple) {
      Scalar d = det(m);
      if (d.is_zero()) fail(Errc::NotInvertible, "group tuple entry is singular", where);
      if (group_ == Group::SL && !d.is_one())
        fail(Errc::DetNotOne, "SL group tuple entry has det " + d.str(), where);
    }
  }
}

GroupPoint GroupPoint::conjugated_by(const Matrix& g) const {
  Matrix gi = inverse(g);
  std::vector<Matrix> out;
  out.reserve(mats_.size());
  for (const auto& m : mats_) out.push_back(g * m * gi);
  return GroupPoint(group_, kind_, std::move(out));
}

GroupPoint GroupPoint::concat(const GroupPoint& other) const {
  if (group_ != other.group_ || kind_ != other.kind_ || n_ != other.n_)
    fail(Errc::SizeMismatch, "cannot concatenate tuples with different tags or sizes");
  std::vector<Matrix> out = mats_;
  out.insert(out.end(), other.mats_.begin(), other.mats_.end());
  return GroupPoint(group_, kind_, std::move(out));
}

GroupPoint GroupPoint::lifted() const {
  std::vector<Matrix> out;
  out.reserve(mats_.size());
  for (const auto& m : mats_) out.push_back(m.lifted());
  return GroupPoint(group_, kind_, std::move(out));
}

}  // namespace pstab
