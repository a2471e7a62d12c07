#include <algorithm>
#include <stdexcept>

#include "conglab/errors.hpp"
#include "conglab/partition.hpp"

namespace conglab {

namespace {

int lowest_in(const PieceMask& m, const char* what) {
  int k = m.lowest();
  if (k == 0) throw InvariantViolation(std::string("no piece available for ") + what);
  return k;
}

}  // namespace

GroupPartition::GroupPartition(const CongruenceSystem& sys, std::size_t m_bar, const Word& anchor)
    : sys_(sys),
      m_bar_(m_bar),
      pres_(witness_presentation(sys, m_bar)),
      anchor_(anchor),
      anchor_letters_(anchor.letters()),
      coloring_(sys, m_bar),
      r_(static_cast<std::size_t>(sys.pieces())) {
  for (std::size_t i = m_bar; i < sys.size(); ++i)
    if (!sys[i].self_complement())
      throw std::invalid_argument("congruence " + std::to_string(i + 1) + " has an order-four witness but is not self-complement");
  for (const Syllable& s : anchor.syllables())
    if (s.gen >= pres_.generators()) throw std::invalid_argument("anchor uses an unknown generator");
  if (tau_parity(anchor, pres_) == Parity::Odd) throw std::invalid_argument("odd parity: anchor has an odd number of tau letters");

  step_.assign(2 * sys.size() * (r_ + 1), 0);
  for (Letter l : alphabet(pres_)) {
    PieceMask dom = letter_domain(sys_, l), ran = letter_range(sys_, l);
    int in = lowest_in(ran, "a range"), out = lowest_in(ran.complement(), "a range complement");
    for (std::size_t k = 1; k <= r_; ++k)
      step_[l * (r_ + 1) + k] = dom.test(static_cast<int>(k)) ? in : out;
  }
  place_end_segments();
}

// Letters of the anchor are rho_n ... rho_1 left to right; segment k is the
// suffix rho_k ... rho_1, and pair k links segment k-1 to segment k through
// rho_k. Segment n is placed with segment 0, so positions run cyclically mod n.
void GroupPartition::place_end_segments() {
  const std::size_t n = anchor_letters_.size();
  seg_.assign(n + 1, 0);
  if (n == 0) {
    case_ = EndSegmentCase::Identity;
    seg_[0] = 1;
    return;
  }
  auto rho = [&](std::size_t k) { return anchor_letters_[n - 1 - ((k - 1) % n)]; };
  auto dom = [&](std::size_t k) { return letter_domain(sys_, rho(k)); };
  auto ran = [&](std::size_t k) { return letter_range(sys_, rho(k)); };

  std::size_t j = 0;
  for (std::size_t k = 1; k <= n && !j; ++k) {
    PieceMask rk = ran(k), d = dom(k + 1);
    if (rk != d && rk != d.complement()) j = k;
  }

  if (j) {
    case_ = EndSegmentCase::Split;
    split_ = j;
    PieceMask d = dom(j + 1), rj = ran(j);
    bool direct = rj.intersects(d) && rj.intersects(d.complement());
    PieceMask s = direct ? dom(j) : dom(j).complement();
    PieceMask target = direct ? rj : rj.complement();
    std::vector<int> pos(n, 0);
    const std::size_t last = j % n;
    PieceMask want;
    if (n == 1) {
      // one letter: the piece is in the domain iff it is in the range
      PieceMask d1 = dom(1);
      want = (d1 & rj) | (d1.complement() & rj.complement());
    } else {
      std::size_t q = (j - 1) % n;
      pos[q] = lowest_in(s, "the split segment");
      for (;;) {
        std::size_t prev = (q + n - 1) % n;
        if (prev == last) break;
        std::size_t k = q == 0 ? n : q;
        bool in_range = ran(k).test(pos[q]);
        pos[prev] = lowest_in(in_range ? dom(k) : dom(k).complement(), "an end segment");
        q = prev;
      }
      // the remaining position must satisfy pair j and pair j+1
      std::size_t k = j + 1 > n ? 1 : j + 1;
      bool next_in_range = ran(k).test(pos[(last + 1) % n]);
      want = target & (next_in_range ? d : d.complement());
    }
    pos[last] = lowest_in(want, "the last end segment");
    for (std::size_t k = 0; k < n; ++k) seg_[k] = pos[k];
    seg_[n] = seg_[0];
  } else {
    case_ = EndSegmentCase::Chain;
    std::vector<PieceMask> chain{dom(1)};
    for (std::size_t k = 1; k <= n; ++k)
      chain.push_back(chain.back() == dom(k) ? ran(k) : ran(k).complement());
    if (chain[n] != chain[0]) throw InvariantViolation("end-segment chain does not close up");
    for (std::size_t k = 0; k < n; ++k) seg_[k] = lowest_in(chain[k], "a chain set");
    seg_[n] = seg_[0];
  }

  for (std::size_t k = 1; k <= n; ++k)
    if (dom(k).test(seg_[k - 1]) != ran(k).test(seg_[k]))
      throw InvariantViolation("end segment " + std::to_string(k) + " breaks its congruence");
}

int GroupPartition::assign_raw(std::span<const Letter> g) const {
  const std::size_t n = anchor_letters_.size();
  std::size_t c = 0;
  while (c < g.size() && c < n && g[g.size() - 1 - c] == anchor_letters_[n - 1 - c]) ++c;
  int piece = seg_[c];
  for (std::size_t k = g.size() - c; k-- > 0;) piece = step(g[k], piece);
  return piece;
}

int GroupPartition::assign(std::span<const Letter> letters) const {
  for (const auto& [w, piece] : faults_)
    if (std::ranges::equal(w, letters)) return piece;
  return assign_raw(letters);
}

int GroupPartition::assign(const Word& g) const {
  auto l = g.letters();
  return assign(std::span<const Letter>(l));
}

int GroupPartition::assign_memoized(const Word& g) const {
  auto l = g.letters();
  for (const auto& [w, piece] : faults_)
    if (w == l) return piece;
  auto rec = [&](auto&& self, std::size_t from) -> int {
    std::span<const Letter> suffix(l.data() + from, l.size() - from);
    Word key = from_letters(suffix, pres_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    int piece;
    const std::size_t n = anchor_letters_.size();
    bool end_segment = suffix.size() <= n && std::equal(suffix.begin(), suffix.end(), anchor_letters_.end() - static_cast<long>(suffix.size()));
    if (end_segment) {
      piece = seg_[suffix.size()];
    } else {
      int inner = self(self, from + 1);
      piece = step(l[from], inner);
    }
    memo_.emplace(std::move(key), piece);
    return piece;
  };
  return rec(rec, 0);
}

void GroupPartition::inject_fault(const Word& g, int piece) {
  if (piece < 1 || piece > static_cast<int>(r_)) throw std::invalid_argument("piece out of range");
  faults_.emplace_back(g.letters(), piece);
  memo_.clear();
}

GroupPartition build_group_partition(const CongruenceSystem& sys, std::size_t m_bar, const Word& anchor) {
  return GroupPartition(sys, m_bar, anchor);
}

}  // namespace conglab
