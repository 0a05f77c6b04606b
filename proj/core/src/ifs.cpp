#include "aa/ifs.hpp"

#include <algorithm>
#include <stdexcept>

#include "aa/error.hpp"

namespace aa {

ParamReport validate_params(const Rational& lambda, const Rational& c) {
  ParamReport report;
  if (!(lambda.sign() > 0 && lambda < 1)) report.violations.emplace_back("0<lambda<1");
  if (!(lambda <= c)) report.violations.emplace_back("lambda<=c");
  if (!(c <= 2 * lambda)) report.violations.emplace_back("c<=2lambda");
  if (!(c + lambda < 1)) report.violations.emplace_back("c+lambda<1");
  if (report.violations.empty()) report.params = Params(lambda, c);
  return report;
}

Params Params::checked(const Rational& lambda, const Rational& c) {
  auto report = validate_params(lambda, c);
  if (!report.ok()) {
    std::string msg = "invalid parameters (" + lambda.str() + ", " + c.str() + "): violates";
    for (const auto& v : report.violations) msg += " " + v;
    throw InvalidParams(msg);
  }
  return *report.params;
}

Rational Params::offset(int letter) const {
  switch (letter) {
    case 1: return Rational(0);
    case 2: return c_ - lambda_;
    case 3: return 1 - lambda_;
    default: throw std::invalid_argument("IFS letter must be 1, 2 or 3");
  }
}

Word::Word(std::initializer_list<int> letters) {
  letters_.reserve(letters.size());
  for (int l : letters) {
    if (l < 1 || l > 3) throw std::invalid_argument("IFS letter must be 1, 2 or 3");
    letters_.push_back(static_cast<std::uint8_t>(l));
  }
}

Word::Word(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {
  for (auto l : letters_) {
    if (l < 1 || l > 3) throw std::invalid_argument("IFS letter must be 1, 2 or 3");
  }
}

Word Word::extended(int letter) const {
  auto letters = letters_;
  letters.push_back(static_cast<std::uint8_t>(letter));
  return Word(std::move(letters));
}

std::string Word::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ",";
    s += static_cast<char>('0' + letters_[i]);
  }
  return s + ")";
}

WordSet::WordSet(std::vector<Word> words) : words_(std::move(words)) {
  if (words_.empty()) throw std::invalid_argument("WordSet needs at least one word");
  rank_ = words_.front().rank();
  for (const auto& w : words_) {
    if (w.rank() != rank_) throw std::invalid_argument("WordSet words must share one rank");
  }
}

WordSet WordSet::all_of_rank(std::size_t rank) {
  std::vector<Word> words{Word{}};
  for (std::size_t k = 0; k < rank; ++k) {
    std::vector<Word> next;
    next.reserve(words.size() * 3);
    for (const auto& w : words) {
      for (int l = 1; l <= 3; ++l) next.push_back(w.extended(l));
    }
    words = std::move(next);
  }
  return WordSet(std::move(words));
}

WordSet WordSet::refined(std::size_t extra) const {
  std::vector<Word> words = words_;
  for (std::size_t k = 0; k < extra; ++k) {
    std::vector<Word> next;
    next.reserve(words.size() * 3);
    for (const auto& w : words) {
      for (int l = 1; l <= 3; ++l) next.push_back(w.extended(l));
    }
    words = std::move(next);
  }
  return WordSet(std::move(words));
}

std::string WordSet::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (i) s += ",";
    s += words_[i].str();
  }
  return s + "}";
}

Interval basic_interval(const Params& p, const Word& w) {
  // Left endpoint is sum_k lambda^(k-1) * offset(i_k); length lambda^n.
  Rational left;
  Rational scale(1);
  for (auto letter : w.letters()) {
    left += scale * p.offset(letter);
    scale *= p.lambda();
  }
  return Interval(left, left + scale);
}

IntervalUnion tilde(const Params& p, const Interval& basic) {
  const Rational& a = basic.lo().rational();
  const Rational t = basic.length();
  Rational probe = t;
  unsigned rank = 0;
  while (probe < 1 && rank < 4096) {
    probe /= p.lambda();
    ++rank;
  }
  if (probe != 1) throw std::invalid_argument("tilde: length " + t.str() + " is not a power of lambda");
  return IntervalUnion::normalize({Interval(a, a + p.c() * t), Interval(a + (1 - p.lambda()) * t, a + t)});
}

namespace {

IntervalUnion refine_cover(const Params& p, const IntervalUnion& cover) {
  std::vector<Interval> parts;
  parts.reserve(cover.size() * 3);
  for (int letter = 1; letter <= 3; ++letter) {
    const Rational off = p.offset(letter);
    for (const auto& part : cover.parts()) {
      parts.emplace_back(p.lambda() * part.lo().rational() + off, p.lambda() * part.hi().rational() + off);
    }
  }
  return IntervalUnion::normalize(std::move(parts));
}

}  // namespace

std::vector<IntervalUnion> level_covers(const Params& p, unsigned n) {
  // G_{k+1} = f1(G_k) u f2(G_k) u f3(G_k): rank-(k+1) words are letter . word.
  std::vector<IntervalUnion> levels;
  levels.reserve(n + 1);
  levels.emplace_back(Interval(0, 1));
  for (unsigned k = 0; k < n; ++k) levels.push_back(refine_cover(p, levels.back()));
  return levels;
}

IntervalUnion level_cover(const Params& p, unsigned n) { return std::move(level_covers(p, n).back()); }

IntervalUnion wordset_union(const Params& p, const WordSet& ws) {
  std::vector<Interval> parts;
  parts.reserve(ws.words().size());
  for (const auto& w : ws.words()) parts.push_back(basic_interval(p, w));
  return IntervalUnion::normalize(std::move(parts));
}

}  // namespace aa
