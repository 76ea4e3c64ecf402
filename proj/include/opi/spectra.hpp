#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opi/errors.hpp"

namespace opi::spectra {

/// Closed interval [lo, hi]; lo == hi represents a point.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool is_point() const { return lo == hi; }
};

/// Finite union of disjoint closed intervals/points of the real line,
/// describing the allowed eigenvalues or singular values of an operator.
/// Construction normalizes: pieces are sorted and overlapping or touching
/// pieces are merged, independent of input order.
class SpectrumSet {
 public:
  explicit SpectrumSet(std::vector<Interval> pieces);
  static SpectrumSet interval(double lo, double hi);
  static SpectrumSet point(double a);

  /// Parses the text form "[a,b] u [c,d] u {e}".
  static SpectrumSet parse(std::string_view text);
  std::string str() const;

  const std::vector<Interval>& pieces() const { return pieces_; }

  /// True iff value lies within tol of some piece (absolute tolerance at the
  /// endpoints; SDP certificates are inexact).
  bool contains(double value, double tol) const;

  /// Distance to the set (0 inside).
  double distance(double value) const;

  bool nonnegative() const;  // every piece has lo >= 0
  double min() const { return pieces_.front().lo; }
  double max() const { return pieces_.back().hi; }
  double max_abs() const;

  bool operator==(const SpectrumSet& o) const;

 private:
  std::vector<Interval> pieces_;
};

/// True iff every element of spec passes contains().
bool spectrum_in(const SpectrumSet& set, const std::vector<double>& spec, double tol);

/// Largest distance of any element of spec to the set (0 when inside).
double spectrum_distance(const SpectrumSet& set, const std::vector<double>& spec);

enum class OperatorKind { general, symmetric, unitary, isometric };
enum class Shape { tall, wide, square, any };

std::string to_string(OperatorKind k);
std::string to_string(Shape s);
OperatorKind parse_kind(std::string_view s);
Shape parse_shape(std::string_view s);

/// A class of linear operators: kind plus (for general/symmetric) the allowed
/// spectrum, plus a shape constraint. Invariants enforced by validate():
/// symmetric and unitary imply square, isometric implies tall, and a general
/// class requires a nonnegative spectrum.
struct OperatorClass {
  OperatorKind kind = OperatorKind::general;
  std::optional<SpectrumSet> spectrum;
  Shape shape = Shape::any;

  static OperatorClass general(SpectrumSet s, Shape shape = Shape::any);
  static OperatorClass symmetric(SpectrumSet s);
  static OperatorClass unitary();
  static OperatorClass isometric();

  void validate() const;

  /// Upper bound on the singular values of class members.
  double max_singular_bound() const;

  std::string str() const;
};

}  // namespace opi::spectra
