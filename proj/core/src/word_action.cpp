#include "theta2/word_action.hpp"

#include <stdexcept>

namespace theta2 {

std::string word_str(const Word& w) {
  std::string s;
  for (Gen g : w) s += (g == Gen::X ? 'X' : 'Y');
  return s.empty() ? "e" : s;
}

namespace {

// Rows of the unitary matrices giving theta_{n_i} |-> theta_{n_i}|_{0,1/2} M:
// row i holds the image atom index and the zeta exponent.
constexpr int kThetaPermX[10] = {3, 4, 1, 2, 6, 5, 7, 8, 9, 10};
constexpr int kThetaPhaseX[10] = {0, 0, 0, 0, 0, 0, 1, 1, 1, 1};
constexpr int kThetaPermY[10] = {8, 5, 3, 10, 4, 7, 9, 2, 6, 1};
constexpr int kThetaPhaseY[10] = {7, 0, 6, 7, 6, 7, 0, 7, 7, 5};

constexpr int kGradPermX[6] = {2, 1, 3, 4, 5, 6};
constexpr int kGradPhaseX[6] = {0, 0, 1, 1, 1, 1};
constexpr int kGradPermY[6] = {6, 1, 2, 3, 4, 5};
constexpr int kGradPhaseY[6] = {1, 6, 7, 6, 0, 0};

}  // namespace

WordAction WordAction::identity() {
  WordAction a;
  for (int i = 0; i < 10; ++i) a.theta_perm[i] = i + 1;
  for (int i = 0; i < 6; ++i) a.grad_perm[i] = i + 1;
  return a;
}

const WordAction& WordAction::generator(Gen g) {
  static const WordAction x = [] {
    WordAction a;
    for (int i = 0; i < 10; ++i) {
      a.theta_perm[i] = kThetaPermX[i];
      a.theta_phase[i] = kThetaPhaseX[i];
    }
    for (int i = 0; i < 6; ++i) {
      a.grad_perm[i] = kGradPermX[i];
      a.grad_phase[i] = kGradPhaseX[i];
    }
    return a;
  }();
  static const WordAction y = [] {
    WordAction a;
    for (int i = 0; i < 10; ++i) {
      a.theta_perm[i] = kThetaPermY[i];
      a.theta_phase[i] = kThetaPhaseY[i];
    }
    for (int i = 0; i < 6; ++i) {
      a.grad_perm[i] = kGradPermY[i];
      a.grad_phase[i] = kGradPhaseY[i];
    }
    return a;
  }();
  return g == Gen::X ? x : y;
}

WordAction WordAction::from_word(const Word& w) {
  WordAction a = identity();
  for (Gen g : w) a = a.then(generator(g));
  return a;
}

WordAction WordAction::then(const WordAction& o) const {
  WordAction r;
  for (int i = 0; i < 10; ++i) {
    int mid = theta_perm[i];
    r.theta_perm[i] = o.theta_perm[mid - 1];
    r.theta_phase[i] = (theta_phase[i] + o.theta_phase[mid - 1]) % 8;
  }
  for (int i = 0; i < 6; ++i) {
    int mid = grad_perm[i];
    r.grad_perm[i] = o.grad_perm[mid - 1];
    r.grad_phase[i] = (grad_phase[i] + o.grad_phase[mid - 1]) % 8;
  }
  return r;
}

bool WordAction::operator==(const WordAction& o) const {
  return theta_perm == o.theta_perm && theta_phase == o.theta_phase &&
         grad_perm == o.grad_perm && grad_phase == o.grad_phase;
}

uint64_t WordAction::key() const {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (int i = 0; i < 10; ++i) mix(uint64_t(theta_perm[i]) * 8 + theta_phase[i]);
  for (int i = 0; i < 6; ++i) mix(uint64_t(grad_perm[i]) * 8 + grad_phase[i] + 997);
  return h;
}

Cyc8 SlashMatrix::entry(int r, int c) const {
  if (r < 1 || r > dim || c < 1 || c > dim) throw std::out_of_range("slash matrix index");
  if (col[r - 1] != c) return Cyc8::zero();
  return Cyc8::zeta_pow(zexp[r - 1]);
}

SlashMatrix slash_matrix_theta(Gen g) {
  SlashMatrix m;
  m.dim = 10;
  const WordAction& a = WordAction::generator(g);
  for (int i = 0; i < 10; ++i) {
    m.col[i] = a.theta_perm[i];
    m.zexp[i] = a.theta_phase[i];
  }
  return m;
}

SlashMatrix slash_matrix_grad(Gen g) {
  SlashMatrix m;
  m.dim = 6;
  const WordAction& a = WordAction::generator(g);
  for (int i = 0; i < 6; ++i) {
    m.col[i] = a.grad_perm[i];
    m.zexp[i] = a.grad_phase[i];
  }
  return m;
}

}  // namespace theta2
