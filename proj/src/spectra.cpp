#include "opi/spectra.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace opi::spectra {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

double parse_number(const std::string& tok) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("spectrum: cannot parse number '" + tok + "'");
  }
  if (pos != tok.size()) throw ParseError("spectrum: trailing characters in '" + tok + "'");
  if (!std::isfinite(v)) throw ParseError("spectrum: non-finite value '" + tok + "'");
  return v;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

SpectrumSet::SpectrumSet(std::vector<Interval> pieces) {
  if (pieces.empty()) throw InvalidClassError("SpectrumSet: empty");
  for (const Interval& p : pieces) {
    if (!std::isfinite(p.lo) || !std::isfinite(p.hi))
      throw InvalidClassError("SpectrumSet: non-finite endpoint");
    if (p.lo > p.hi) throw InvalidClassError("SpectrumSet: interval with lo > hi");
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& a, const Interval& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  for (const Interval& p : pieces) {
    if (!pieces_.empty() && p.lo <= pieces_.back().hi)
      pieces_.back().hi = std::max(pieces_.back().hi, p.hi);
    else
      pieces_.push_back(p);
  }
}

SpectrumSet SpectrumSet::interval(double lo, double hi) {
  return SpectrumSet({Interval{lo, hi}});
}

SpectrumSet SpectrumSet::point(double a) { return SpectrumSet({Interval{a, a}}); }

SpectrumSet SpectrumSet::parse(std::string_view text) {
  std::vector<Interval> pieces;
  std::string s = trim(text);
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos >= s.size()) break;
    char open = s[pos];
    char close;
    if (open == '[')
      close = ']';
    else if (open == '{')
      close = '}';
    else
      throw ParseError("spectrum: expected '[' or '{' at '" + s.substr(pos) + "'");
    const std::size_t end = s.find(close, pos + 1);
    if (end == std::string::npos) throw ParseError("spectrum: unterminated piece");
    const std::string body = s.substr(pos + 1, end - pos - 1);
    if (open == '[') {
      const std::size_t comma = body.find(',');
      if (comma == std::string::npos)
        throw ParseError("spectrum: interval needs two endpoints: [" + body + "]");
      pieces.push_back(Interval{parse_number(trim(body.substr(0, comma))),
                                parse_number(trim(body.substr(comma + 1)))});
    } else {
      const double a = parse_number(trim(body));
      pieces.push_back(Interval{a, a});
    }
    pos = end + 1;
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos < s.size()) {
      if (s[pos] != 'u' && s[pos] != 'U')
        throw ParseError("spectrum: expected 'u' between pieces");
      ++pos;
    }
  }
  if (pieces.empty()) throw ParseError("spectrum: no pieces in '" + std::string(text) + "'");
  return SpectrumSet(std::move(pieces));
}

std::string SpectrumSet::str() const {
  std::string out;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i) out += " u ";
    if (pieces_[i].is_point())
      out += "{" + fmt(pieces_[i].lo) + "}";
    else
      out += "[" + fmt(pieces_[i].lo) + "," + fmt(pieces_[i].hi) + "]";
  }
  return out;
}

bool SpectrumSet::contains(double value, double tol) const {
  for (const Interval& p : pieces_)
    if (value >= p.lo - tol && value <= p.hi + tol) return true;
  return false;
}

double SpectrumSet::distance(double value) const {
  double d = std::numeric_limits<double>::infinity();
  for (const Interval& p : pieces_) {
    if (value < p.lo)
      d = std::min(d, p.lo - value);
    else if (value > p.hi)
      d = std::min(d, value - p.hi);
    else
      return 0.0;
  }
  return d;
}

bool SpectrumSet::nonnegative() const {
  return pieces_.front().lo >= 0.0;
}

double SpectrumSet::max_abs() const {
  return std::max(std::abs(pieces_.front().lo), std::abs(pieces_.back().hi));
}

bool SpectrumSet::operator==(const SpectrumSet& o) const {
  if (pieces_.size() != o.pieces_.size()) return false;
  for (std::size_t i = 0; i < pieces_.size(); ++i)
    if (pieces_[i].lo != o.pieces_[i].lo || pieces_[i].hi != o.pieces_[i].hi) return false;
  return true;
}

bool spectrum_in(const SpectrumSet& set, const std::vector<double>& spec, double tol) {
  for (double v : spec)
    if (!set.contains(v, tol)) return false;
  return true;
}

double spectrum_distance(const SpectrumSet& set, const std::vector<double>& spec) {
  double d = 0.0;
  for (double v : spec) d = std::max(d, set.distance(v));
  return d;
}

std::string to_string(OperatorKind k) {
  switch (k) {
    case OperatorKind::general: return "general";
    case OperatorKind::symmetric: return "symmetric";
    case OperatorKind::unitary: return "unitary";
    case OperatorKind::isometric: return "isometric";
  }
  return "?";
}

std::string to_string(Shape s) {
  switch (s) {
    case Shape::tall: return "tall";
    case Shape::wide: return "wide";
    case Shape::square: return "square";
    case Shape::any: return "any";
  }
  return "?";
}

OperatorKind parse_kind(std::string_view s) {
  const std::string t = trim(s);
  if (t == "general") return OperatorKind::general;
  if (t == "symmetric") return OperatorKind::symmetric;
  if (t == "unitary") return OperatorKind::unitary;
  if (t == "isometric") return OperatorKind::isometric;
  throw ParseError("unknown operator kind '" + t + "'");
}

Shape parse_shape(std::string_view s) {
  const std::string t = trim(s);
  if (t == "tall") return Shape::tall;
  if (t == "wide") return Shape::wide;
  if (t == "square") return Shape::square;
  if (t == "any") return Shape::any;
  throw ParseError("unknown shape '" + t + "'");
}

OperatorClass OperatorClass::general(SpectrumSet s, Shape shape) {
  OperatorClass c{OperatorKind::general, std::move(s), shape};
  c.validate();
  return c;
}

OperatorClass OperatorClass::symmetric(SpectrumSet s) {
  OperatorClass c{OperatorKind::symmetric, std::move(s), Shape::square};
  c.validate();
  return c;
}

OperatorClass OperatorClass::unitary() {
  return OperatorClass{OperatorKind::unitary, std::nullopt, Shape::square};
}

OperatorClass OperatorClass::isometric() {
  return OperatorClass{OperatorKind::isometric, std::nullopt, Shape::tall};
}

void OperatorClass::validate() const {
  switch (kind) {
    case OperatorKind::symmetric:
      if (shape != Shape::square)
        throw InvalidClassError("symmetric class requires square shape");
      if (!spectrum) throw InvalidClassError("symmetric class requires a spectrum");
      break;
    case OperatorKind::unitary:
      if (shape != Shape::square)
        throw InvalidClassError("unitary class requires square shape");
      if (spectrum) throw InvalidClassError("unitary class carries no spectrum");
      break;
    case OperatorKind::isometric:
      if (shape != Shape::tall)
        throw InvalidClassError("isometric class requires tall shape");
      if (spectrum) throw InvalidClassError("isometric class carries no spectrum");
      break;
    case OperatorKind::general:
      if (!spectrum) throw InvalidClassError("general class requires a spectrum");
      if (!spectrum->nonnegative())
        throw InvalidClassError("general class requires a nonnegative spectrum");
      break;
  }
}

double OperatorClass::max_singular_bound() const {
  if (kind == OperatorKind::unitary || kind == OperatorKind::isometric) return 1.0;
  return spectrum->max_abs();
}

std::string OperatorClass::str() const {
  std::string out = to_string(kind);
  if (spectrum) out += " " + spectrum->str();
  out += " (" + to_string(shape) + ")";
  return out;
}

}  // namespace opi::spectra
