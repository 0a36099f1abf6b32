#pragma once

#include <string>
#include <string_view>

#include "sft/clopen.hpp"
#include "sft/matrix.hpp"
#include "sft/table_map.hpp"
#include "sft/word.hpp"

// Text formats. All parsers throw sft::Error (Malformed for syntax, the
// domain codes for semantic failures); all printers emit text that parses
// back to an equal value.
//
//   matrix:  "N" line, then N lines of N space-separated 0/1 digits
//   clopen:  "D <depth>" line, then one comma-separated word per line;
//            EMPTY or FULL may replace the word lines or stand alone
//   table:   "L <depth>" line, then "nu -> mu" per entry; the empty word
//            is written EMPTY (the depth-0 identity is "EMPTY -> EMPTY")
//   point:   "pre|per", comma-separated, empty preperiod written "|per"
namespace sft::io {

TransitionMatrix parse_matrix(std::string_view text);
std::string format_matrix(const TransitionMatrix& A);

/// Parses a single word "1,2,1"; "EMPTY" and "" denote the empty word.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

ClopenSet parse_clopen(const TransitionMatrix& A, std::string_view text);
std::string format_clopen(const ClopenSet& X);

TableMap parse_table(const TransitionMatrix& A, std::string_view text);
std::string format_table(const TableMap& g);

EPPoint parse_point(const TransitionMatrix& A, std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace sft::io
