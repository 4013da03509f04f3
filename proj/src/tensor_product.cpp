#include "u4kit/tensor_product.hpp"

#include <stdexcept>
#include <vector>

namespace u4 {

namespace {

struct Box {
  int row, col, label;
};

// Reverse reading word (rows top to bottom, columns right to left) must stay
// a lattice word: every prefix has cnt[k] <= cnt[k-1].
bool lattice_ok(std::vector<Box> boxes) {
  std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) {
    if (a.row != b.row) return a.row < b.row;
    return a.col > b.col;
  });
  int cnt[6] = {0, 0, 0, 0, 0, 0};
  for (const Box& b : boxes) {
    ++cnt[b.label];
    if (b.label > 1 && cnt[b.label] > cnt[b.label - 1]) return false;
  }
  return true;
}

struct LrState {
  std::array<int, 4> mu;
  Decomposition out;
};

void add_strips(LrState& st, int k, const std::array<int, 4>& shape,
                std::vector<Box>& boxes);

// Distribute the remaining boxes of label k over rows `row`..4 as a
// horizontal strip on top of prev_shape, keeping cur a partition.
void strip_rows(LrState& st, int k, const std::array<int, 4>& prev, int row,
                int left, std::array<int, 4>& cur, std::vector<Box>& boxes) {
  if (row > 4) {
    if (left != 0) return;
    size_t added = 0;
    for (int r = 0; r < 4; ++r)
      for (int c = prev[static_cast<size_t>(r)]; c < cur[static_cast<size_t>(r)]; ++c) {
        boxes.push_back({r, c, k});
        ++added;
      }
    add_strips(st, k + 1, cur, boxes);
    boxes.resize(boxes.size() - added);
    return;
  }
  size_t ri = static_cast<size_t>(row - 1);
  for (int add = 0; add <= left; ++add) {
    int nr = prev[ri] + add;
    if (row >= 2 && nr > cur[ri - 1]) break;   // partition condition
    if (row >= 2 && nr > prev[ri - 1]) break;  // horizontal strip condition
    cur[ri] = nr;
    strip_rows(st, k, prev, row + 1, left - add, cur, boxes);
  }
}

void add_strips(LrState& st, int k, const std::array<int, 4>& shape,
                std::vector<Box>& boxes) {
  if (k > 4) {
    if (lattice_ok(boxes)) ++st.out[Irrep{shape}];
    return;
  }
  std::array<int, 4> cur{};
  strip_rows(st, k, shape, 1, st.mu[static_cast<size_t>(k - 1)], cur, boxes);
}

}  // namespace

Decomposition decompose(const Irrep& f, const Irrep& fp) {
  if (!f.valid() || !fp.valid())
    throw std::invalid_argument("decompose: invalid irrep label");
  LrState st;
  st.mu = fp.n;
  std::vector<Box> boxes;
  add_strips(st, 1, f.n, boxes);
  return std::move(st.out);
}

int outer_multiplicity(const Irrep& f, const Irrep& fp, const Irrep& fpp) {
  Decomposition d = decompose(f, fp);
  auto it = d.find(fpp);
  return it == d.end() ? 0 : it->second;
}

}  // namespace u4
