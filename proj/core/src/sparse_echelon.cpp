#include "twistkit/sparse_echelon.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace twistkit {

SparseEchelon::SparseEchelon(Field f, std::uint64_t ambient)
    : field_(f), ambient_(ambient) {}

bool SparseEchelon::add_row(SparseVec row) {
  if (row.empty()) return false;
  if (scratch_.empty()) {
    scratch_.assign(ambient_, Scalar::zero(field_));
    stamp_.assign(ambient_, 0);
  }
  ++epoch_;
  std::priority_queue<std::uint64_t, std::vector<std::uint64_t>,
                      std::greater<>> heap;
  std::vector<std::uint64_t> touched;
  auto put = [&](std::uint64_t c, const Scalar& s) {
    if (stamp_[c] != epoch_) {
      stamp_[c] = epoch_;
      scratch_[c] = s;
      touched.push_back(c);
      heap.push(c);
    } else {
      scratch_[c] += s;
    }
  };
  for (auto& [c, s] : row) put(c, s);

  std::uint64_t lead = ambient_;
  while (!heap.empty()) {
    std::uint64_t col = heap.top();
    heap.pop();
    if (stamp_[col] != epoch_ || scratch_[col].is_zero()) continue;
    auto it = pivot_to_row_.find(col);
    if (it == pivot_to_row_.end()) {
      lead = col;
      break;
    }
    Scalar coeff = scratch_[col];
    scratch_[col] = Scalar::zero(field_);
    const SparseVec& prow = rows_[it->second];
    for (auto& [c, s] : prow) {
      if (c == col) continue;
      put(c, -(coeff * s));
    }
  }
  if (lead == ambient_) return false;

  SparseVec out;
  std::sort(touched.begin(), touched.end());
  Scalar inv = scratch_[lead].inverse();
  for (std::uint64_t c : touched) {
    if (c < lead || scratch_[c].is_zero()) continue;
    out.emplace_back(c, scratch_[c] * inv);
  }
  pivot_to_row_[lead] = rows_.size();
  rows_.push_back(std::move(out));
  finalized_ = false;
  return true;
}

void SparseEchelon::add_trusted_rref_row(SparseVec row) {
  pivot_to_row_[row.front().first] = rows_.size();
  rows_.push_back(std::move(row));
  finalized_ = false;
}

void SparseEchelon::finalize() {
  if (finalized_) return;
  // sort rows by pivot, then clear entries sitting on other pivot columns,
  // working from the last pivot upward so each subtraction uses a row that
  // is already fully reduced
  {
    std::vector<std::pair<std::uint64_t, std::size_t>> by_piv;
    by_piv.reserve(rows_.size());
    for (auto& [piv, idx] : pivot_to_row_) by_piv.emplace_back(piv, idx);
    std::sort(by_piv.begin(), by_piv.end());
    std::vector<SparseVec> sorted;
    sorted.reserve(rows_.size());
    pivots_.clear();
    for (auto& [piv, idx] : by_piv) {
      pivots_.push_back(piv);
      sorted.push_back(std::move(rows_[idx]));
    }
    rows_ = std::move(sorted);
    pivot_to_row_.clear();
    for (std::size_t i = 0; i < pivots_.size(); ++i)
      pivot_to_row_[pivots_[i]] = i;
  }
  for (std::size_t i = rows_.size(); i-- > 0;) {
    std::map<std::uint64_t, Scalar> acc;
    bool dirty = false;
    for (auto& [c, s] : rows_[i]) acc.emplace(c, s);
    auto it = acc.begin();
    ++it;  // skip own pivot
    while (it != acc.end()) {
      auto pit = pivot_to_row_.find(it->first);
      if (pit == pivot_to_row_.end() || it->second.is_zero()) {
        ++it;
        continue;
      }
      dirty = true;
      Scalar coeff = it->second;
      it = acc.erase(it);
      for (auto& [c, s] : rows_[pit->second]) {
        if (c == pit->first) continue;
        auto [jt, fresh] = acc.emplace(c, -(coeff * s));
        if (!fresh) jt->second -= coeff * s;
      }
      // inserted keys are all greater than the erased pivot column, so
      // the ascending sweep still visits them
    }
    if (dirty) {
      SparseVec out;
      for (auto& [c, s] : acc)
        if (!s.is_zero()) out.emplace_back(c, s);
      rows_[i] = std::move(out);
    }
  }
  // release scratch
  scratch_.clear();
  scratch_.shrink_to_fit();
  stamp_.clear();
  stamp_.shrink_to_fit();
  finalized_ = true;
}

SparseVec SparseEchelon::reduce(const SparseVec& v) const {
  if (!finalized_)
    throw ScalarError("SparseEchelon::reduce before finalize");
  std::map<std::uint64_t, Scalar> acc;
  for (auto& [c, s] : v) {
    auto [it, fresh] = acc.emplace(c, s);
    if (!fresh) it->second += s;
  }
  auto it = acc.begin();
  while (it != acc.end()) {
    if (it->second.is_zero()) {
      it = acc.erase(it);
      continue;
    }
    auto pit = pivot_to_row_.find(it->first);
    if (pit == pivot_to_row_.end()) {
      ++it;
      continue;
    }
    Scalar coeff = it->second;
    it = acc.erase(it);
    for (auto& [c, s] : rows_[pit->second]) {
      if (c == pit->first) continue;
      auto [jt, fresh] = acc.emplace(c, -(coeff * s));
      if (!fresh) jt->second -= coeff * s;
    }
  }
  SparseVec out;
  out.reserve(acc.size());
  for (auto& [c, s] : acc)
    if (!s.is_zero()) out.emplace_back(c, s);
  return out;
}

}  // namespace twistkit
