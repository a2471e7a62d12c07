#include <cctype>
#include <optional>

#include "conglab/errors.hpp"
#include "conglab/system.hpp"

namespace conglab {

namespace {

constexpr int kMaxPieces = 1 << 14;

class LineScanner {
 public:
  LineScanner(std::string_view line, int line_no) : s_(line), line_(line_no) {}

  void skip_space() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= s_.size();
  }
  int column() const { return static_cast<int>(pos_) + 1; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column()); }

  std::string_view word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  long number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 9) {
      pos_ = start;
      fail("number too large");
    }
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  std::size_t pos() const { return pos_; }
  void rewind(std::size_t p) { pos_ = p; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int line_;
};

PieceMask parse_side(LineScanner& sc, int r) {
  sc.expect('{');
  PieceMask m(r);
  std::size_t open = sc.pos();
  while (!sc.peek('}')) {
    if (sc.at_end()) sc.fail("unterminated set, expected '}'");
    std::size_t at = sc.pos();
    long k = sc.number();
    if (k < 1 || k > r) {
      sc.rewind(at);
      sc.skip_space();
      sc.fail("index out of range: " + std::to_string(k) + " (sets " + std::to_string(r) + ")");
    }
    if (m.test(static_cast<int>(k))) {
      sc.rewind(at);
      sc.skip_space();
      sc.fail("duplicate index " + std::to_string(k));
    }
    m.set(static_cast<int>(k));
  }
  std::size_t close = sc.pos();
  sc.expect('}');
  if (m.empty()) {
    sc.rewind(open - 1);
    sc.fail("improper side: empty set");
  }
  if (m.is_full()) {
    sc.rewind(close);
    sc.fail("improper side: full set");
  }
  return m;
}

}  // namespace

ParsedSystem parse_system_text(std::string_view text) {
  ParsedSystem out;
  std::optional<int> r;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    LineScanner sc(line, line_no);
    if (!sc.at_end()) {
      std::size_t kw_at = sc.pos();
      std::string_view kw = sc.word();
      if (kw == "sets") {
        if (r) {
          sc.rewind(kw_at);
          sc.fail("duplicate 'sets' declaration");
        }
        long n = sc.number();
        if (n < 1 || n > kMaxPieces) sc.fail("piece count out of range");
        r = static_cast<int>(n);
        out.system = CongruenceSystem(*r);
      } else if (kw == "cong") {
        if (!r) {
          sc.rewind(kw_at);
          sc.fail("'cong' before 'sets'");
        }
        PieceMask left = parse_side(sc, *r);
        sc.expect('~');
        PieceMask right = parse_side(sc, *r);
        if (left == right)
          out.notes.push_back("line " + std::to_string(line_no) + ": identity congruence " + left.to_string() +
                              " ~ " + right.to_string() + " is redundant");
        out.system.add(std::move(left), std::move(right));
      } else {
        sc.rewind(kw_at);
        sc.fail(kw.empty() ? "expected 'sets' or 'cong'" : "unknown keyword '" + std::string(kw) + "'");
      }
      if (!sc.at_end()) sc.fail("unexpected trailing input");
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (!r) throw ParseError("missing 'sets' declaration", line_no, 1);
  return out;
}

CongruenceSystem parse_system(std::string_view text) { return parse_system_text(text).system; }

std::string print_system(const CongruenceSystem& sys) {
  std::string out = "sets " + std::to_string(sys.pieces()) + "\n";
  for (const auto& c : sys.congruences()) out += "cong " + c.left.to_string() + " ~ " + c.right.to_string() + "\n";
  return out;
}

}  // namespace conglab
