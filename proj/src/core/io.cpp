#include "netmet/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "netmet/error.hpp"

namespace netmet {

namespace {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

// Whitespace-separated tokens; '#' starts a comment running to end of line.
class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  bool next(Token& out) {
    skip();
    if (pos_ >= text_.size()) return false;
    const std::size_t start = pos_;
    const std::size_t line = line_, col = col_;
    while (pos_ < text_.size() && !is_space(text_[pos_]) && text_[pos_] != '#') advance();
    out = Token{text_.substr(start, pos_ - start), line, col};
    return true;
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }

private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size()) {
      if (is_space(text_[pos_])) {
        advance();
      } else if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

double parse_weight(const Token& t) {
  double v = 0.0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    throw ParseError(t.line, t.column, "invalid weight '" + std::string(t.text) + "'");
  if (!std::isfinite(v)) throw ParseError(t.line, t.column, "weight must be finite, got '" + std::string(t.text) + "'");
  return v;
}

std::string pair_list(const Correspondence& r, const Network& x, const Network& y) {
  std::string s;
  for (const auto& [a, b] : r.pairs()) {
    if (!s.empty()) s += ' ';
    s += x.label(a) + ":" + y.label(b);
  }
  return s;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

Network parse_network(std::string_view text) {
  Lexer lex(text);
  Token t;
  auto expect_more = [&](const char* what) {
    if (!lex.next(t)) throw ParseError(lex.line(), lex.column(), std::string("unexpected end of input, expected ") + what);
  };

  expect_more("'netmet-network'");
  if (t.text != "netmet-network") throw ParseError(t.line, t.column, "expected 'netmet-network' header");
  expect_more("format version");
  if (t.text != "1") throw ParseError(t.line, t.column, "unsupported format version '" + std::string(t.text) + "'");
  expect_more("'labels'");
  if (t.text != "labels") throw ParseError(t.line, t.column, "expected 'labels'");

  std::vector<std::string> labels;
  std::unordered_set<std::string_view> seen;
  for (;;) {
    expect_more("a label or 'weights'");
    if (t.text == "weights") break;
    if (!seen.insert(t.text).second)
      throw ParseError(t.line, t.column, "duplicate label '" + std::string(t.text) + "'");
    labels.emplace_back(t.text);
  }
  const std::size_t labels_end_line = t.line, labels_end_col = t.column;
  if (labels.empty()) throw ParseError(labels_end_line, labels_end_col, "network needs at least one label");

  const std::size_t n = labels.size();
  std::vector<double> w;
  w.reserve(n * n);
  while (w.size() < n * n && lex.next(t)) w.push_back(parse_weight(t));
  if (w.size() < n * n)
    throw ParseError(lex.line(), lex.column(),
                     "expected " + std::to_string(n * n) + " weights, found " + std::to_string(w.size()));
  if (lex.next(t))
    throw ParseError(t.line, t.column,
                     "expected " + std::to_string(n * n) + " weights, found trailing token '" + std::string(t.text) + "'");
  return Network(std::move(labels), Matrix(n, std::move(w)));
}

std::string serialize_network(const Network& x) {
  std::string s = "netmet-network 1\nlabels";
  for (const auto& l : x.labels()) {
    if (l.empty() || l == "weights" || l.find_first_of(" \t\n\r\f\v#") != std::string::npos)
      throw std::invalid_argument("label '" + l + "' cannot be written to a network document");
    s += " " + l;
  }
  s += "\nweights\n";
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j) s += ' ';
      s += format_double(x.weight(i, j));
    }
    s += '\n';
  }
  return s;
}

Network read_network_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_network(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), e.detail() + " in '" + path + "'");
  }
}

void write_network_file(const Network& x, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << serialize_network(x);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

std::string format_correspondence(const Correspondence& r, const Network& x, const Network& y) {
  return pair_list(r, x, y);
}

std::string format_report(const DistanceReport& report, const Network& x, const Network& y) {
  std::ostringstream os;
  os << "netmet-report 1\n";
  os << "x.nodes = " << report.n_x << "\n";
  os << "y.nodes = " << report.n_y << "\n";
  for (const auto& b : report.lower_bounds) os << "lower." << b.method << " = " << format_double(b.value) << "\n";
  for (const auto& b : report.upper_bounds) {
    os << "upper." << b.method << " = " << format_double(b.value) << "\n";
    if (b.witness) os << "upper." << b.method << ".witness = " << pair_list(*b.witness, x, y) << "\n";
  }
  if (report.exact) {
    os << "exact = " << format_double(report.exact->value) << "\n";
    os << "exact.witness = " << pair_list(report.exact->witness, x, y) << "\n";
  } else {
    os << "exact = skipped\n";
  }
  for (const auto& s : report.skipped) os << "skipped." << s.method << " = " << s.reason << "\n";
  os << "[timings]\n";
  for (const auto& t : report.timings) os << "time." << t.method << " = " << format_double(t.seconds) << "\n";
  return os.str();
}

std::string format_motif_set(const MotifSet& m) {
  std::ostringstream os;
  os << "netmet-motifs 1\n";
  os << "order = " << m.order << "\n";
  os << "count = " << m.matrices.size() << "\n";
  for (std::size_t k = 0; k < m.matrices.size(); ++k) {
    const Matrix& a = m.matrices[k];
    os << "motif." << k << " =";
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) os << " |";
      for (std::size_t j = 0; j < a.size(); ++j) os << ' ' << format_double(a(i, j));
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace netmet
