#include "csmlap/matrix_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace csmlap {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Splits on whitespace; a token starting with '"' runs to the closing quote
// plus an optional successor '+'.
std::vector<std::string> split_tokens(const std::string& line, std::size_t lineno) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t b = i;
    if (line[i] == '"') {
      ++i;
      while (i < line.size() && line[i] != '"') ++i;
      if (i == line.size())
        throw MatrixParseError("line " + std::to_string(lineno) + ": unterminated quoted label");
      ++i;
      if (i < line.size() && line[i] == '+') ++i;
    } else {
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    }
    out.push_back(line.substr(b, i - b));
  }
  return out;
}

struct LineReader {
  std::istream& in;
  std::size_t lineno = 0;

  // next non-blank, non-comment line
  bool next(std::string& out) {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      std::string t = trimmed(line);
      if (t.empty() || t[0] == '#') continue;
      out = t;
      return true;
    }
    return false;
  }
};

[[noreturn]] void fail(std::size_t lineno, const std::string& why) {
  throw MatrixParseError("line " + std::to_string(lineno) + ": " + why);
}

std::vector<Label> parse_label_list(const std::vector<std::string>& tokens, std::size_t lineno) {
  std::vector<Label> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    try {
      out.push_back(parse_label(t));
    } catch (const std::invalid_argument& e) {
      fail(lineno, e.what());
    }
  }
  return out;
}

}  // namespace

LabeledMatrix read_matrix(std::istream& in) {
  LineReader reader{in};
  std::string line;

  if (!reader.next(line)) throw MatrixParseError("missing 'ring' line");
  if (line.rfind("ring", 0) != 0 || (line.size() > 4 && line[4] != ' ' && line[4] != '\t'))
    fail(reader.lineno, "expected 'ring <spec>'");
  Ring ring = [&] {
    try {
      return Ring::parse(trimmed(line.substr(4)));
    } catch (const LiteralError& e) {
      fail(reader.lineno, e.what());
    }
  }();

  auto read_labels = [&](const char* keyword) {
    if (!reader.next(line)) throw MatrixParseError(std::string("missing '") + keyword + "' line");
    std::size_t klen = std::string(keyword).size();
    if (line.rfind(keyword, 0) != 0 ||
        (line.size() > klen && line[klen] != ' ' && line[klen] != '\t'))
      fail(reader.lineno, std::string("expected '") + keyword + " <labels>'");
    auto tokens = split_tokens(line.substr(klen), reader.lineno);
    auto labels = parse_label_list(tokens, reader.lineno);
    try {
      return OrderedIndexSet(std::move(labels));
    } catch (const std::invalid_argument& e) {
      fail(reader.lineno, e.what());
    }
  };
  OrderedIndexSet rows = read_labels("rows");
  OrderedIndexSet cols = read_labels("cols");

  std::vector<RingValue> entries;
  entries.reserve(rows.size() * cols.size());
  if (cols.size() > 0) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!reader.next(line))
        throw MatrixParseError("missing entry line for row " + rows.at(r).str());
      auto tokens = split_tokens(line, reader.lineno);
      if (tokens.size() != cols.size())
        fail(reader.lineno, "expected " + std::to_string(cols.size()) + " entries, got " +
                                std::to_string(tokens.size()));
      for (const auto& t : tokens) {
        try {
          entries.push_back(ring.parse_value(t));
        } catch (const LiteralError& e) {
          fail(reader.lineno, e.what());
        }
      }
    }
  }
  if (reader.next(line)) fail(reader.lineno, "trailing content after matrix entries");

  return LabeledMatrix(std::move(ring), std::move(rows), std::move(cols), std::move(entries));
}

LabeledMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MatrixParseError("cannot open matrix file: " + path);
  try {
    return read_matrix(in);
  } catch (const MatrixParseError& e) {
    throw MatrixParseError(path + ": " + e.what());
  }
}

void write_matrix(std::ostream& out, const LabeledMatrix& a) {
  out << "ring " << a.ring().spec() << '\n';
  out << "rows";
  for (const auto& l : a.rows().labels()) out << ' ' << l.str();
  out << '\n';
  out << "cols";
  for (const auto& l : a.cols().labels()) out << ' ' << l.str();
  out << '\n';
  if (a.col_count() == 0) return;
  for (std::size_t r = 0; r < a.row_count(); ++r) {
    for (std::size_t c = 0; c < a.col_count(); ++c) {
      if (c) out << ' ';
      out << a.at(r, c).str();
    }
    out << '\n';
  }
}

std::string matrix_file_text(const LabeledMatrix& a) {
  std::ostringstream os;
  write_matrix(os, a);
  return os.str();
}

std::string matrix_grid(const LabeledMatrix& a) {
  std::size_t roww = 0;
  for (const auto& l : a.rows().labels()) roww = std::max(roww, l.str().size());
  std::vector<std::size_t> colw(a.col_count(), 0);
  for (std::size_t c = 0; c < a.col_count(); ++c) {
    colw[c] = a.cols().at(c).str().size();
    for (std::size_t r = 0; r < a.row_count(); ++r)
      colw[c] = std::max(colw[c], a.at(r, c).str().size());
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return std::string(w - s.size(), ' ') + s;
  };
  std::string out;
  out += std::string(roww, ' ');
  for (std::size_t c = 0; c < a.col_count(); ++c) out += "  " + pad(a.cols().at(c).str(), colw[c]);
  out += '\n';
  for (std::size_t r = 0; r < a.row_count(); ++r) {
    out += pad(a.rows().at(r).str(), roww);
    for (std::size_t c = 0; c < a.col_count(); ++c) out += "  " + pad(a.at(r, c).str(), colw[c]);
    out += '\n';
  }
  return out;
}

}  // namespace csmlap
