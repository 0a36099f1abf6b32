#include "sft/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "sft/error.hpp"

namespace sft::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Non-blank lines, trimmed.
std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (auto t = trim(line); !t.empty()) lines.push_back(t);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

long parse_integer(std::string_view s, const char* what) {
  s = trim(s);
  long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorCode::Malformed, std::string("expected an integer for ") + what + ", got '" + std::string(s) + "'");
  return value;
}

// "K <n>" header line.
std::size_t parse_header(std::string_view line, char key) {
  if (line.size() < 2 || line[0] != key || (line[1] != ' ' && line[1] != '\t'))
    throw Error(ErrorCode::Malformed, std::string("expected header '") + key + " <depth>', got '" + std::string(line) + "'");
  long v = parse_integer(line.substr(1), "depth");
  if (v < 0) throw Error(ErrorCode::Malformed, "depth must be non-negative");
  return static_cast<std::size_t>(v);
}

}  // namespace

TransitionMatrix parse_matrix(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::Malformed, "empty matrix file");
  long n = parse_integer(lines[0], "matrix size");
  if (n < 1 || n > 4096) throw Error(ErrorCode::Malformed, "matrix size out of range");
  if (lines.size() != static_cast<std::size_t>(n) + 1)
    throw Error(ErrorCode::Malformed, "expected " + std::to_string(n) + " matrix rows, got " + std::to_string(lines.size() - 1));
  std::vector<std::vector<int>> raw;
  for (long i = 1; i <= n; ++i) {
    std::istringstream row{std::string(lines[i])};
    std::vector<int> entries;
    std::string tok;
    while (row >> tok) entries.push_back(static_cast<int>(parse_integer(tok, "matrix entry")));
    raw.push_back(std::move(entries));
  }
  return TransitionMatrix::validate(raw);
}

std::string format_matrix(const TransitionMatrix& A) {
  std::ostringstream out;
  out << A.size() << '\n';
  for (const auto& row : A.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  return out.str();
}

Word parse_word(std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "EMPTY") return Word{};
  std::vector<Symbol> symbols;
  while (true) {
    auto comma = text.find(',');
    long v = parse_integer(text.substr(0, comma), "symbol");
    if (v < 1 || v > 1'000'000) throw Error(ErrorCode::Malformed, "symbol out of range: " + std::to_string(v));
    symbols.push_back(static_cast<Symbol>(v));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Word(std::move(symbols));
}

std::string format_word(const Word& w) { return w.empty() ? "EMPTY" : w.to_string(); }

ClopenSet parse_clopen(const TransitionMatrix& A, std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::Malformed, "empty clopen file");
  if (lines.size() == 1 && lines[0] == "EMPTY") return ClopenSet::empty(A);
  if (lines.size() == 1 && lines[0] == "FULL") return ClopenSet::full(A);
  std::size_t depth = parse_header(lines[0], 'D');
  if (lines.size() == 2 && lines[1] == "EMPTY") return ClopenSet::empty(A);
  if (lines.size() == 2 && lines[1] == "FULL") return ClopenSet::full(A);
  std::vector<Word> words;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i] == "EMPTY" || lines[i] == "FULL")
      throw Error(ErrorCode::Malformed, "EMPTY/FULL must be the only word line");
    Word w = parse_word(lines[i]);
    if (w.size() > depth)
      throw Error(ErrorCode::Malformed, "word " + w.to_string() + " is longer than the declared depth");
    words.push_back(std::move(w));
  }
  return ClopenSet::from_words(A, std::move(words));
}

std::string format_clopen(const ClopenSet& X) {
  if (X.is_empty()) return "D 0\nEMPTY\n";
  if (X.is_full()) return "D 0\nFULL\n";
  std::string out = "D " + std::to_string(X.depth()) + "\n";
  for (const Word& w : X.words()) out += w.to_string() + "\n";
  return out;
}

TableMap parse_table(const TransitionMatrix& A, std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::Malformed, "empty table file");
  std::size_t depth = parse_header(lines[0], 'L');
  std::vector<TableEntry> entries;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto arrow = lines[i].find("->");
    if (arrow == std::string_view::npos)
      throw Error(ErrorCode::Malformed, "expected 'nu -> mu', got '" + std::string(lines[i]) + "'");
    Word domain = parse_word(lines[i].substr(0, arrow));
    Word image = parse_word(lines[i].substr(arrow + 2));
    if (domain.size() > depth)
      throw Error(ErrorCode::Malformed, "domain word " + domain.to_string() + " is longer than the declared depth");
    entries.push_back(TableEntry{std::move(domain), std::move(image)});
  }
  TableMap g = TableMap::validate(A, std::move(entries));
  if (g.depth() != depth)
    throw Error(ErrorCode::Malformed, "declared depth " + std::to_string(depth) + " but longest domain word has length " +
                                          std::to_string(g.depth()));
  return g;
}

std::string format_table(const TableMap& g) {
  std::string out = "L " + std::to_string(g.depth()) + "\n";
  for (const TableEntry& e : g.entries()) out += format_word(e.domain) + " -> " + format_word(e.image) + "\n";
  return out;
}

EPPoint parse_point(const TransitionMatrix& A, std::string_view text) {
  text = trim(text);
  auto bar = text.find('|');
  if (bar == std::string_view::npos) throw Error(ErrorCode::Malformed, "point must be written 'pre|per'");
  Word pre = trim(text.substr(0, bar)).empty() ? Word{} : parse_word(text.substr(0, bar));
  Word per = parse_word(text.substr(bar + 1));
  return EPPoint::make(A, std::move(pre), std::move(per));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::BadInput, "cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadInput, "cannot write file '" + path + "'");
  out << contents;
}

}  // namespace sft::io
