#pragma once
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "sqc/datum.hpp"
#include "sqc/words.hpp"

namespace sqc {

enum class CornerPos : uint8_t { AB = 0, BA2 = 1, A2B2 = 2, B2A = 3 };

// the unique quad whose letters at positions (p, p+1) equal the corner
Quad lookup_square(const Datum& d, int a, int b, CornerPos pos = CornerPos::AB);

// Rectangle with bottom (A-letters, left to right) and right side
// (B-letters, bottom to top). Returns top (left to right) and left
// (bottom to top), so that bottom*right = left*top in the group.
struct Rectangle {
  std::vector<int> top;
  std::vector<int> left;
};
Rectangle fill_rectangle(const Datum& d, const std::vector<int>& bottom, const std::vector<int>& right);

// Generators of one vertex stabilizer acting on the labels of the other tree.
// side 2: generators = A-letters, points = B-letters; side 1: swapped.
class SideView {
 public:
  SideView(const Datum& d, int side);
  int side() const { return side_; }
  const Alphabet& gens() const { return gens_; }
  const Alphabet& pts() const { return pts_; }
  // generator s applied to the edge labelled y: new label and the generator carried along
  int out(int s, int y) const { return out_[s * pts_.d + y]; }
  int next(int s, int y) const { return next_[s * pts_.d + y]; }

 private:
  int side_;
  Alphabet gens_, pts_;
  std::vector<uint8_t> out_, next_;
};

// Reduced label paths from the base vertex, up to a radius.
class Ball {
 public:
  Ball(const Alphabet& al, int radius);
  int radius() const { return radius_; }
  size_t size() const { return words_.size(); }
  const std::vector<uint8_t>& word(size_t i) const { return words_[i]; }
  size_t sphere_begin(int k) const { return offset_[k]; }
  size_t sphere_end(int k) const { return offset_[k + 1]; }
  long index(const std::vector<uint8_t>& w) const;  // -1 if not reduced / too long
  size_t parent(size_t i) const { return parent_[i]; }
  const Alphabet& alphabet() const { return al_; }

 private:
  Alphabet al_;
  int radius_;
  std::vector<std::vector<uint8_t>> words_;
  std::vector<size_t> offset_;
  std::vector<size_t> parent_;
};

struct BallAction {
  int side = 2;
  int radius = 0;
  std::shared_ptr<const Ball> ball;
  std::vector<int> perm;  // ball index -> ball index
  bool fixes_radius(int k) const;
};

// action on B(v_side, n) of a word over the generator alphabet
BallAction word_action_on_ball(const Datum& d, const std::vector<int>& word, int side, int n);

// per-generator ball actions with memoization
class BallActions {
 public:
  BallActions(const Datum& d, int side, int radius);
  const SideView& view() const { return view_; }
  const Ball& ball() const { return *ball_; }
  std::shared_ptr<const Ball> ball_ptr() const { return ball_; }
  const std::vector<int>& generator(int g) const { return gen_[g]; }
  // state carried after reading the label path of point i starting from generator g
  int carried(int g, size_t i) const { return state_[g][i]; }
  BallAction word(const std::vector<int>& w) const;

 private:
  SideView view_;
  std::shared_ptr<const Ball> ball_;
  std::vector<std::vector<int>> gen_;
  std::vector<std::vector<uint8_t>> state_;
};

// permutation of the opposite alphabet induced by letter g
std::vector<int> local_action_permutation(const Datum& d, int g, int side);

}  // namespace sqc
