#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "aa/interval.hpp"
#include "aa/rational.hpp"

namespace aa {

struct ParamReport;

/// Parameters of the IFS {lambda x, lambda x + c - lambda, lambda x + 1 - lambda}
/// on [0,1]. Construct through validate_params or Params::checked.
class Params {
 public:
  /// Throws InvalidParams listing every violated constraint.
  static Params checked(const Rational& lambda, const Rational& c);

  const Rational& lambda() const { return lambda_; }
  const Rational& c() const { return c_; }

  /// Translation of map `letter` (1, 2 or 3): 0, c - lambda, 1 - lambda.
  Rational offset(int letter) const;
  /// f_letter(x) = lambda x + offset(letter).
  Rational apply(int letter, const Rational& x) const { return lambda_ * x + offset(letter); }

  std::string str() const { return "(" + lambda_.str() + ", " + c_.str() + ")"; }

 private:
  Params(Rational lambda, Rational c) : lambda_(std::move(lambda)), c_(std::move(c)) {}
  friend ParamReport validate_params(const Rational& lambda, const Rational& c);

  Rational lambda_;
  Rational c_;
};

struct ParamReport {
  std::optional<Params> params;
  /// Names of violated constraints, e.g. "c+lambda<1".
  std::vector<std::string> violations;

  bool ok() const { return params.has_value(); }
};

/// Checks 0 < lambda < 1, lambda <= c <= 2 lambda and c + lambda < 1.
ParamReport validate_params(const Rational& lambda, const Rational& c);

/// A word over {1,2,3}; rank 0 denotes [0,1].
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(std::vector<std::uint8_t> letters);

  std::size_t rank() const { return letters_.size(); }
  const std::vector<std::uint8_t>& letters() const { return letters_; }
  Word extended(int letter) const;
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<std::uint8_t> letters_;
};

/// Words of one common rank; denotes the union of their basic intervals.
class WordSet {
 public:
  WordSet() = default;
  /// Throws std::invalid_argument on mixed ranks or an empty list.
  explicit WordSet(std::vector<Word> words);
  WordSet(std::initializer_list<Word> words) : WordSet(std::vector<Word>(words)) {}

  static WordSet all_of_rank(std::size_t rank);

  std::size_t rank() const { return rank_; }
  const std::vector<Word>& words() const { return words_; }
  /// Every word extended by `extra` more letters, in lexicographic order.
  WordSet refined(std::size_t extra) const;
  std::string str() const;

 private:
  std::size_t rank_ = 0;
  std::vector<Word> words_;
};

/// f_w([0,1]) for w = (i1,...,in), i.e. f_{i1} o ... o f_{in} applied to [0,1].
Interval basic_interval(const Params& p, const Word& w);

/// The three children of a basic interval [a, a+t]: since c <= 2 lambda the
/// first two merge, giving [a, a+ct] u [a+(1-lambda)t, a+t].
IntervalUnion tilde(const Params& p, const Interval& basic);

/// Union of all 3^n rank-n basic intervals.
IntervalUnion level_cover(const Params& p, unsigned n);
/// level_cover for every level 0..n.
std::vector<IntervalUnion> level_covers(const Params& p, unsigned n);

IntervalUnion wordset_union(const Params& p, const WordSet& ws);

}  // namespace aa
