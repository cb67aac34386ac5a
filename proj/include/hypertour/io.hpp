#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hypertour/degenerate.hpp"
#include "hypertour/hypercore.hpp"

// Line-oriented text formats. All of them use LF line endings, single spaces
// between fields and a mandatory trailing newline.
//
//   kht 1            khd 1            trn 1            cert 1
//   k n              k n m            n                n
//   <k ids> x C(n,k) <k ids> x m      u v   (sorted)   u v subset-index (sorted)
//
// Rows of .kht/.khd follow canonical subset order. The cert subset index is
// the 0-based lexicographic rank of the generating hyperarc's vertex set.

namespace hypertour {

namespace detail {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {
    if (!text_.empty() && text_.back() != '\n') throw ParseError(count_lines(), "missing trailing newline");
  }

  bool done() const { return pos_ >= text_.size(); }
  std::size_t line_no() const { return line_; }

  std::string_view next() {
    if (done()) throw ParseError(line_ + 1, "unexpected end of input");
    const std::size_t end = text_.find('\n', pos_);
    std::string_view line = text_.substr(pos_, end - pos_);
    pos_ = end + 1;
    ++line_;
    if (line.find('\r') != std::string_view::npos) throw ParseError(line_, "carriage return in input");
    return line;
  }

  /// Splits the next line into integers separated by single spaces.
  std::vector<std::int64_t> next_ints(std::size_t expected) {
    const std::string_view line = next();
    std::vector<std::int64_t> out;
    std::size_t i = 0;
    while (true) {
      const std::size_t j = line.find(' ', i);
      const std::string_view tok = line.substr(i, j == std::string_view::npos ? std::string_view::npos : j - i);
      std::int64_t value = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(line_, "malformed integer '" + std::string(tok) + "'");
      }
      out.push_back(value);
      if (j == std::string_view::npos) break;
      i = j + 1;
    }
    if (out.size() != expected) {
      throw ParseError(line_, "expected " + std::to_string(expected) + " fields, found " + std::to_string(out.size()));
    }
    return out;
  }

  void expect_header(std::string_view magic) {
    const std::string_view line = next();
    if (line != std::string(magic) + " 1") {
      throw ParseError(line_, "expected header '" + std::string(magic) + " 1', found '" + std::string(line) + "'");
    }
  }

 private:
  std::size_t count_lines() const {
    std::size_t c = 1;
    for (char ch : text_) c += ch == '\n' ? 1 : 0;
    return c;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

inline int to_int(std::int64_t v, std::size_t line, const char* what) {
  if (v < 0 || v > kMaxVertices) throw ParseError(line, std::string(what) + " out of range");
  return static_cast<int>(v);
}

inline void write_arcs(std::string& out, const HyperDigraph& h) {
  for (const HyperArc& a : h.arcs()) {
    const auto& s = a.seq();
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(s[i]);
    }
    out += '\n';
  }
}

/// Reads `rows` hyperarc rows, enforcing strictly increasing canonical order.
inline std::vector<std::vector<VertexId>> read_rows(LineReader& in, int k, int n, std::uint64_t rows) {
  std::vector<std::vector<VertexId>> tuples;
  std::uint64_t prev_rank = 0;
  for (std::uint64_t r = 0; r < rows; ++r) {
    if (in.done()) {
      fail(ErrorKind::kMissingSubset, "input ends after " + std::to_string(r) + " of " + std::to_string(rows) + " rows");
    }
    const auto ints = in.next_ints(static_cast<std::size_t>(k));
    std::vector<VertexId> t;
    for (std::int64_t v : ints) {
      if (v < 1 || v > n) throw ParseError(in.line_no(), "vertex id " + std::to_string(v) + " out of range");
      t.push_back(static_cast<VertexId>(v));
    }
    const HyperArc arc(t, n);
    const std::uint64_t rank = subset_rank(arc.mask(), n);
    if (r > 0 && rank == prev_rank) {
      fail(ErrorKind::kDuplicateSubset, "line " + std::to_string(in.line_no()) + " repeats the previous subset");
    }
    if (r > 0 && rank < prev_rank) throw ParseError(in.line_no(), "rows out of canonical subset order");
    prev_rank = rank;
    tuples.push_back(std::move(t));
  }
  return tuples;
}

}  // namespace detail

inline std::string serialize_kht(const HyperTournament& h) {
  std::string out = "kht 1\n" + std::to_string(h.k()) + " " + std::to_string(h.n()) + "\n";
  detail::write_arcs(out, h);
  return out;
}

inline HyperTournament parse_kht(std::string_view text) {
  detail::LineReader in(text);
  in.expect_header("kht");
  const auto kn = in.next_ints(2);
  const int k = detail::to_int(kn[0], in.line_no(), "k");
  const int n = detail::to_int(kn[1], in.line_no(), "n");
  if (k < 2 || k > n) throw ParseError(in.line_no(), "need 2 <= k <= n");
  const auto tuples = detail::read_rows(in, k, n, binomial(n, k));
  if (!in.done()) throw ParseError(in.line_no() + 1, "trailing content after the last row");
  return build_hypertournament(k, n, tuples);
}

inline std::string serialize_khd(const HyperDigraph& h) {
  std::string out = "khd 1\n" + std::to_string(h.k()) + " " + std::to_string(h.n()) + " " +
                    std::to_string(h.size()) + "\n";
  detail::write_arcs(out, h);
  return out;
}

inline HyperDigraph parse_khd(std::string_view text) {
  detail::LineReader in(text);
  in.expect_header("khd");
  const auto knm = in.next_ints(3);
  const int k = detail::to_int(knm[0], in.line_no(), "k");
  const int n = detail::to_int(knm[1], in.line_no(), "n");
  if (k < 2) throw ParseError(in.line_no(), "need k >= 2");
  if (knm[2] < 0 || static_cast<std::uint64_t>(knm[2]) > binomial(n, k)) {
    throw ParseError(in.line_no(), "arc count out of range");
  }
  const auto tuples = detail::read_rows(in, k, n, static_cast<std::uint64_t>(knm[2]));
  if (!in.done()) throw ParseError(in.line_no() + 1, "trailing content after the last row");
  return HyperDigraph::build(k, n, tuples);
}

/// Accepts either a .kht or a .khd document.
inline HyperDigraph parse_hypergraph(std::string_view text) {
  if (text.starts_with("kht ")) return parse_kht(text);
  return parse_khd(text);
}

inline std::string serialize_trn(const Tournament& t) {
  std::string out = "trn 1\n" + std::to_string(t.n()) + "\n";
  for (const auto& [u, v] : t.arcs()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

inline Tournament parse_trn(std::string_view text) {
  detail::LineReader in(text);
  in.expect_header("trn");
  const int n = detail::to_int(in.next_ints(1)[0], in.line_no(), "n");
  std::vector<std::pair<VertexId, VertexId>> arcs;
  while (!in.done()) {
    const auto uv = in.next_ints(2);
    if (uv[0] < 1 || uv[0] > n || uv[1] < 1 || uv[1] > n) throw ParseError(in.line_no(), "vertex id out of range");
    const std::pair<VertexId, VertexId> arc(static_cast<VertexId>(uv[0]), static_cast<VertexId>(uv[1]));
    if (!arcs.empty() && arc <= arcs.back()) throw ParseError(in.line_no(), "arcs not sorted lexicographically");
    arcs.push_back(arc);
  }
  return Tournament::from_arcs(n, arcs);
}

inline std::string serialize_cert(const GenerationCertificate& cert) {
  std::string out = "cert 1\n" + std::to_string(cert.n) + "\n";
  for (const auto& e : cert.entries) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + std::to_string(subset_rank(e.arc.mask(), cert.n)) +
           "\n";
  }
  return out;
}

/// Resolves subset indices against H.
inline GenerationCertificate parse_cert(std::string_view text, const HyperDigraph& h) {
  detail::LineReader in(text);
  in.expect_header("cert");
  GenerationCertificate cert;
  cert.n = detail::to_int(in.next_ints(1)[0], in.line_no(), "n");
  if (cert.n != h.n()) throw ParseError(in.line_no(), "certificate and hypergraph disagree on n");
  while (!in.done()) {
    const auto row = in.next_ints(3);
    if (row[0] < 1 || row[0] > cert.n || row[1] < 1 || row[1] > cert.n) {
      throw ParseError(in.line_no(), "vertex id out of range");
    }
    if (row[2] < 0) throw ParseError(in.line_no(), "negative subset index");
    const auto idx = h.index_of_rank(static_cast<std::uint64_t>(row[2]));
    if (!idx) throw ParseError(in.line_no(), "subset index " + std::to_string(row[2]) + " has no hyperarc");
    CertificateEntry e{static_cast<VertexId>(row[0]), static_cast<VertexId>(row[1]), h.arc(*idx)};
    if (!cert.entries.empty() && std::pair(e.u, e.v) <= std::pair(cert.entries.back().u, cert.entries.back().v)) {
      throw ParseError(in.line_no(), "entries not sorted by (u, v)");
    }
    cert.entries.push_back(std::move(e));
  }
  return cert;
}

}  // namespace hypertour
