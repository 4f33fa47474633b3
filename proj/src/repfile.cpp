// Copyright 2026 The sdrcalc Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sdrcalc/repfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "str_format.hpp"

namespace sdrcalc {
namespace {

[[noreturn]] void fail(const std::string& name, int line, const std::string& msg) {
  throw RepFileError(name + ":" + std::to_string(line) + ": " + msg);
}

bool is_blank_or_comment(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Hands out meaningful lines (blank and '#' comment lines skipped) with
// their 1-based position in the original text.
class LineReader {
 public:
  explicit LineReader(const std::string& text) : in_(text) {}

  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++lineno_;
      if (!is_blank_or_comment(line)) return true;
    }
    return false;
  }

  int lineno() const { return lineno_; }

 private:
  std::istringstream in_;
  int lineno_ = 0;
};

Eigen::Index parse_dim(const std::string& name, int line, const std::string& tok,
                       const char* what) {
  // Dimensions are small; reuse the double parser and insist on integrality.
  double v = 0;
  if (!internal::parse_double(tok, v) || v != static_cast<Eigen::Index>(v) ||
      v < 0 || v > 1e9) {
    fail(name, line, std::string("bad ") + what + " '" + tok + "'");
  }
  return static_cast<Eigen::Index>(v);
}

SymMat read_matrix(LineReader& reader, const std::string& name, Eigen::Index k,
                   const std::string& section) {
  Eigen::MatrixXd mat(k, k);
  std::string line;
  for (Eigen::Index r = 0; r < k; ++r) {
    if (!reader.next(line)) {
      fail(name, reader.lineno(), "unexpected end of file in matrix " + section +
                                      " (row " + std::to_string(r + 1) + " of " +
                                      std::to_string(k) + ")");
    }
    const std::vector<std::string> toks = tokenize(line);
    if (static_cast<Eigen::Index>(toks.size()) != k) {
      fail(name, reader.lineno(), "matrix " + section + " row " +
                                      std::to_string(r + 1) + " has " +
                                      std::to_string(toks.size()) +
                                      " entries, expected " + std::to_string(k));
    }
    for (Eigen::Index c = 0; c < k; ++c) {
      double v = 0;
      if (!internal::parse_double(toks[static_cast<std::size_t>(c)], v)) {
        fail(name, reader.lineno(), "matrix " + section + ": bad number '" +
                                        toks[static_cast<std::size_t>(c)] + "'");
      }
      mat(r, c) = v;
    }
  }
  try {
    return SymMat(mat);
  } catch (const std::invalid_argument& e) {
    fail(name, reader.lineno(), "matrix " + section + ": " + e.what());
  }
}

std::string trim_after_keyword(const std::string& line, const std::string& keyword) {
  std::size_t pos = line.find(keyword);
  pos += keyword.size();
  while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
    ++pos;
  std::string rest = line.substr(pos);
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back())))
    rest.pop_back();
  return rest;
}

void check_label_tokens(const std::vector<std::string>& labels, const char* field) {
  for (const std::string& label : labels) {
    if (label.empty()) {
      throw std::invalid_argument(std::string(field) + ": empty label");
    }
    for (char ch : label) {
      if (std::isspace(static_cast<unsigned char>(ch)) || ch == '#') {
        throw std::invalid_argument(std::string(field) + ": label '" + label +
                                    "' contains whitespace or '#'");
      }
    }
  }
}

}  // namespace

SDRep parse_rep(const std::string& text, const std::string& name) {
  LineReader reader(text);
  std::string line;

  if (!reader.next(line)) fail(name, reader.lineno(), "empty file");
  {
    const std::vector<std::string> toks = tokenize(line);
    if (toks.size() != 2 || toks[0] != "sdrep") {
      fail(name, reader.lineno(), "expected header 'sdrep " +
                                      std::to_string(kRepFormatVersion) + "'");
    }
    if (toks[1] != std::to_string(kRepFormatVersion)) {
      fail(name, reader.lineno(),
           "unsupported format version '" + toks[1] + "' (this reader handles " +
               std::to_string(kRepFormatVersion) + ")");
    }
  }

  if (!reader.next(line)) fail(name, reader.lineno(), "missing 'dims' line");
  const std::vector<std::string> dims = tokenize(line);
  if (dims.size() != 4 || dims[0] != "dims") {
    fail(name, reader.lineno(), "expected 'dims <k> <n> <m>'");
  }
  const Eigen::Index k = parse_dim(name, reader.lineno(), dims[1], "k");
  const Eigen::Index n = parse_dim(name, reader.lineno(), dims[2], "n");
  const Eigen::Index m = parse_dim(name, reader.lineno(), dims[3], "m");
  if (k < 1) fail(name, reader.lineno(), "dims: k must be >= 1");
  if (n < 1) fail(name, reader.lineno(), "dims: n must be >= 1");

  SDRep rep;
  bool saw_blocks = false, saw_labels = false, saw_lifted = false;

  // Metadata lines are order-free between 'dims' and 'A'.
  for (;;) {
    if (!reader.next(line)) {
      fail(name, reader.lineno(), "unexpected end of file before matrix 'A'");
    }
    const std::vector<std::string> toks = tokenize(line);
    if (toks[0] == "A") {
      if (toks.size() != 1) fail(name, reader.lineno(), "junk after 'A'");
      break;
    }
    if (toks[0] == "blocks") {
      if (saw_blocks) fail(name, reader.lineno(), "duplicate 'blocks' line");
      saw_blocks = true;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        rep.block_dims.push_back(
            parse_dim(name, reader.lineno(), toks[i], "block dim"));
      }
      if (rep.block_dims.empty()) {
        fail(name, reader.lineno(), "'blocks' line lists no dimensions");
      }
    } else if (toks[0] == "labels") {
      if (saw_labels) fail(name, reader.lineno(), "duplicate 'labels' line");
      saw_labels = true;
      rep.ambient_labels.assign(toks.begin() + 1, toks.end());
      if (static_cast<Eigen::Index>(rep.ambient_labels.size()) != n) {
        fail(name, reader.lineno(), "'labels' lists " +
                                        std::to_string(rep.ambient_labels.size()) +
                                        " names, expected " + std::to_string(n));
      }
    } else if (toks[0] == "lifted_labels") {
      if (saw_lifted) fail(name, reader.lineno(), "duplicate 'lifted_labels' line");
      saw_lifted = true;
      rep.lifted_labels.assign(toks.begin() + 1, toks.end());
      if (static_cast<Eigen::Index>(rep.lifted_labels.size()) != m) {
        fail(name, reader.lineno(),
             "'lifted_labels' lists " + std::to_string(rep.lifted_labels.size()) +
                 " names, expected " + std::to_string(m));
      }
    } else if (toks[0] == "provenance") {
      rep.provenance.push_back(trim_after_keyword(line, "provenance"));
    } else {
      fail(name, reader.lineno(), "unexpected line '" + toks[0] +
                                      "' (expected metadata or 'A')");
    }
  }

  rep.A = read_matrix(reader, name, k, "A");
  rep.B.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 1; i <= n; ++i) {
    const std::string section = "B " + std::to_string(i);
    if (!reader.next(line)) {
      fail(name, reader.lineno(), "unexpected end of file, expected '" + section + "'");
    }
    if (tokenize(line) != std::vector<std::string>{"B", std::to_string(i)}) {
      fail(name, reader.lineno(), "expected section header '" + section + "'");
    }
    rep.B.push_back(read_matrix(reader, name, k, section));
  }
  rep.C.reserve(static_cast<std::size_t>(m));
  for (Eigen::Index j = 1; j <= m; ++j) {
    const std::string section = "C " + std::to_string(j);
    if (!reader.next(line)) {
      fail(name, reader.lineno(), "unexpected end of file, expected '" + section + "'");
    }
    if (tokenize(line) != std::vector<std::string>{"C", std::to_string(j)}) {
      fail(name, reader.lineno(), "expected section header '" + section + "'");
    }
    rep.C.push_back(read_matrix(reader, name, k, section));
  }

  if (!reader.next(line) || tokenize(line) != std::vector<std::string>{"end"}) {
    fail(name, reader.lineno(), "expected 'end' sentinel");
  }
  if (reader.next(line)) {
    fail(name, reader.lineno(), "content after 'end' sentinel");
  }

  try {
    validate(rep);
  } catch (const std::invalid_argument& e) {
    fail(name, reader.lineno(), e.what());
  }
  return rep;
}

SDRep load_rep(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RepFileError(path.string() + ": cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw RepFileError(path.string() + ": read error");
  return parse_rep(buf.str(), path.string());
}

std::string format_rep(const SDRep& rep) {
  validate(rep);
  check_label_tokens(rep.ambient_labels, "labels");
  check_label_tokens(rep.lifted_labels, "lifted_labels");

  std::ostringstream out;
  out << "sdrep " << kRepFormatVersion << "\n";
  out << "dims " << rep.k() << " " << rep.n() << " " << rep.m() << "\n";
  if (!rep.block_dims.empty()) {
    out << "blocks";
    for (Eigen::Index d : rep.block_dims) out << " " << d;
    out << "\n";
  }
  if (!rep.ambient_labels.empty()) {
    out << "labels";
    for (const std::string& s : rep.ambient_labels) out << " " << s;
    out << "\n";
  }
  if (!rep.lifted_labels.empty()) {
    out << "lifted_labels";
    for (const std::string& s : rep.lifted_labels) out << " " << s;
    out << "\n";
  }
  for (const std::string& p : rep.provenance) {
    std::string clean = p;
    for (char& ch : clean) {
      if (ch == '\n' || ch == '\r') ch = ' ';
    }
    out << "provenance " << clean << "\n";
  }

  const auto write_matrix = [&](const SymMat& mat) {
    for (Eigen::Index r = 0; r < mat.dim(); ++r) {
      for (Eigen::Index c = 0; c < mat.dim(); ++c) {
        if (c) out << " ";
        out << internal::double_str(mat(r, c));
      }
      out << "\n";
    }
  };
  out << "A\n";
  write_matrix(rep.A);
  for (Eigen::Index i = 0; i < rep.n(); ++i) {
    out << "B " << (i + 1) << "\n";
    write_matrix(rep.B[i]);
  }
  for (Eigen::Index j = 0; j < rep.m(); ++j) {
    out << "C " << (j + 1) << "\n";
    write_matrix(rep.C[j]);
  }
  out << "end\n";
  return out.str();
}

void save_rep(const SDRep& rep, const std::filesystem::path& path) {
  const std::string text = format_rep(rep);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw RepFileError(path.string() + ": cannot open for writing");
  out << text;
  out.flush();
  if (!out) throw RepFileError(path.string() + ": write error");
}

}  // namespace sdrcalc
