#include "sqc/action.hpp"

#include <stdexcept>

namespace sqc {

Quad lookup_square(const Datum& d, int a, int b, CornerPos pos) {
  int p = int(pos);
  for (const Quad& q : d.quads()) {
    int x = q[p], y = q[(p + 1) % 4];
    int qa = (p % 2 == 0) ? x : y, qb = (p % 2 == 0) ? y : x;
    if (qa == a && qb == b) return q;
  }
  throw std::logic_error("corner not covered");
}

SideView::SideView(const Datum& d, int side) : side_(side) {
  if (side != 1 && side != 2) throw std::invalid_argument("side must be 1 or 2");
  gens_ = side == 2 ? d.A() : d.B();
  pts_ = side == 2 ? d.B() : d.A();
  out_.resize(gens_.d * pts_.d);
  next_.resize(gens_.d * pts_.d);
  for (int s = 0; s < gens_.d; ++s)
    for (int y = 0; y < pts_.d; ++y) {
      if (side == 2) {
        // s y = b'^-1 a'^-1 for the quad (s, y, a', b')
        const Quad& q = d.at(s, y);
        out_[s * pts_.d + y] = uint8_t(d.B().inv(q[3]));
        next_[s * pts_.d + y] = uint8_t(d.A().inv(q[2]));
      } else {
        // quad (q, s, y, p) read through its sigma-image at corner (y^-1, s^-1)
        const Quad& q = d.at(d.A().inv(y), d.B().inv(s));
        out_[s * pts_.d + y] = q[2];
        next_[s * pts_.d + y] = q[3];
      }
    }
}

Rectangle fill_rectangle(const Datum& d, const std::vector<int>& bottom, const std::vector<int>& right) {
  SideView v(d, 2);
  Rectangle r;
  std::vector<int> row = bottom;
  for (int y : right) {
    for (int i = int(row.size()) - 1; i >= 0; --i) {
      int s = row[i];
      int ny = v.out(s, y);
      row[i] = v.next(s, y);
      y = ny;
    }
    r.left.push_back(y);
  }
  r.top = row;
  return r;
}

Ball::Ball(const Alphabet& al, int radius) : al_(al), radius_(radius) {
  words_.push_back({});
  parent_.push_back(0);
  offset_.push_back(0);
  offset_.push_back(1);
  for (int k = 1; k <= radius; ++k) {
    size_t b = offset_[k - 1], e = offset_[k];
    for (size_t i = b; i < e; ++i) {
      for (int y = 0; y < al.d; ++y) {
        if (k > 1 && y == al.inv(words_[i].back())) continue;
        auto w = words_[i];
        w.push_back(uint8_t(y));
        words_.push_back(std::move(w));
        parent_.push_back(i);
      }
    }
    offset_.push_back(words_.size());
  }
}

long Ball::index(const std::vector<uint8_t>& w) const {
  int k = int(w.size());
  if (k > radius_) return -1;
  if (k == 0) return 0;
  long rank = 0;
  for (int i = 0; i < k; ++i) {
    int y = w[i];
    if (y < 0 || y >= al_.d) return -1;
    if (i == 0) {
      rank = y;
      continue;
    }
    int forbid = al_.inv(w[i - 1]);
    if (y == forbid) return -1;
    rank = rank * (al_.d - 1) + (y < forbid ? y : y - 1);
  }
  return long(offset_[k]) + rank;
}

bool BallAction::fixes_radius(int k) const {
  size_t e = ball->sphere_end(k);
  for (size_t i = 0; i < e; ++i)
    if (perm[i] != int(i)) return false;
  return true;
}

BallActions::BallActions(const Datum& d, int side, int radius)
    : view_(d, side), ball_(std::make_shared<Ball>(view_.pts(), radius)) {
  const Ball& B = *ball_;
  const int ng = view_.gens().d;
  gen_.assign(ng, std::vector<int>(B.size(), 0));
  state_.assign(ng, std::vector<uint8_t>(B.size(), 0));
  const int np = view_.pts().d;
  for (int g = 0; g < ng; ++g) {
    auto& img = gen_[g];
    auto& st = state_[g];
    img[0] = 0;
    st[0] = uint8_t(g);
    for (size_t i = 1; i < B.size(); ++i) {
      size_t par = B.parent(i);
      int y = B.word(i).back();
      int s = st[par];
      int ny = view_.out(s, y);
      st[i] = uint8_t(view_.next(s, y));
      // image of the child = child of the parent's image along ny
      size_t pimg = size_t(img[par]);
      int k = int(B.word(i).size());
      long rank_parent = long(pimg) - long(B.sphere_begin(k - 1));
      long idx;
      if (k == 1) {
        idx = long(B.sphere_begin(1)) + ny;
      } else {
        int forbid = view_.pts().inv(B.word(pimg).back());
        idx = long(B.sphere_begin(k)) + rank_parent * (np - 1) + (ny < forbid ? ny : ny - 1);
      }
      img[i] = int(idx);
    }
  }
}

BallAction BallActions::word(const std::vector<int>& w) const {
  BallAction a;
  a.side = view_.side();
  a.radius = ball_->radius();
  a.ball = ball_;
  a.perm.resize(ball_->size());
  for (size_t i = 0; i < ball_->size(); ++i) a.perm[i] = int(i);
  // rightmost letter acts first
  for (int j = int(w.size()) - 1; j >= 0; --j) {
    const auto& g = gen_[w[j]];
    for (auto& x : a.perm) x = g[x];
  }
  return a;
}

BallAction word_action_on_ball(const Datum& d, const std::vector<int>& word, int side, int n) {
  BallActions acts(d, side, n);
  return acts.word(word);
}

std::vector<int> local_action_permutation(const Datum& d, int g, int side) {
  SideView v(d, side);
  std::vector<int> p(v.pts().d);
  for (int y = 0; y < v.pts().d; ++y) p[y] = v.out(g, y);
  return p;
}

}  // namespace sqc
