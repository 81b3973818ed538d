#include "lasg/cayley_io.hpp"

#include <charconv>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "lasg/errors.hpp"

namespace lasg {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') {
      ++j;
    }
    if (j > i) {
      out.push_back(s.substr(i, j - i));
    }
    i = j;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// All lines, 1-based numbering, comments and blanks dropped.
std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++number;
    std::string_view t = trim(raw);
    if (!t.empty() && t.front() != '#') {
      out.push_back({number, t});
    }
    if (nl == std::string_view::npos) {
      break;
    }
    pos = nl + 1;
  }
  return out;
}

std::size_t parse_order(const Line& line) {
  std::size_t n = 0;
  const char* first = line.text.data();
  const char* last = first + line.text.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line.number, "expected decimal order, got '" +
                                      std::string(line.text) + "'");
  }
  if (n == 0) {
    throw ParseError(line.number, "order must be at least 1");
  }
  if (n > Magma::max_order) {
    throw ParseError(line.number, "order " + std::to_string(n) +
                                      " exceeds maximum " +
                                      std::to_string(Magma::max_order));
  }
  return n;
}

Magma parse_block(std::span<const Line> lines, std::size_t end_line) {
  if (lines.empty()) {
    throw ParseError(end_line, "missing order line");
  }
  const std::size_t n = parse_order(lines[0]);
  if (lines.size() < 2) {
    throw ParseError(end_line, "missing label line");
  }

  auto label_tokens = split_ws(lines[1].text);
  if (label_tokens.size() != n) {
    throw ParseError(lines[1].number,
                     "expected " + std::to_string(n) + " labels, got " +
                         std::to_string(label_tokens.size()));
  }
  std::vector<std::string> labels;
  std::unordered_map<std::string_view, std::size_t> index;
  for (auto tok : label_tokens) {
    if (!index.emplace(tok, labels.size()).second) {
      throw ParseError(lines[1].number,
                       "duplicate label '" + std::string(tok) + "'");
    }
    labels.emplace_back(tok);
  }

  std::vector<ElemId> table;
  table.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (2 + r >= lines.size()) {
      throw ParseError(end_line, "expected " + std::to_string(n) +
                                     " table rows, got " + std::to_string(r));
    }
    const Line& line = lines[2 + r];
    auto cells = split_ws(line.text);
    if (cells.size() != n) {
      throw ParseError(line.number, "row has " + std::to_string(cells.size()) +
                                        " entries, expected " +
                                        std::to_string(n));
    }
    for (auto cell : cells) {
      auto it = index.find(cell);
      if (it == index.end()) {
        throw ParseError(line.number,
                         "unknown label '" + std::string(cell) + "'");
      }
      table.push_back(elem(it->second));
    }
  }
  if (lines.size() > n + 2) {
    throw ParseError(lines[n + 2].number, "unexpected content after table");
  }
  return Magma(std::move(labels), std::move(table));
}

}  // namespace

Magma parse_cayley(std::string_view text) {
  auto lines = significant_lines(text);
  std::size_t end_line = lines.empty() ? 1 : lines.back().number;
  return parse_block(lines, end_line);
}

std::string serialize_cayley(const Magma& m) {
  const std::size_t n = m.order();
  std::string out = std::to_string(n);
  out += '\n';
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) out += ' ';
    out += m.labels()[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    out += '\n';
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) out += ' ';
      out += m.label(m.product(elem(i), elem(j)));
    }
  }
  return out;
}

std::vector<Magma> parse_model_stream(std::string_view text) {
  auto lines = significant_lines(text);
  std::vector<Magma> models;
  std::vector<Line> block;
  std::optional<std::pair<std::size_t, std::size_t>> declared;  // line, count

  auto flush = [&](std::size_t end_line) {
    models.push_back(parse_block(block, end_line));
    block.clear();
  };

  for (const Line& line : lines) {
    if (declared) {
      throw ParseError(line.number, "content after count line");
    }
    if (line.text == stream_separator) {
      flush(line.number);
      continue;
    }
    if (line.text.starts_with("count:")) {
      std::string_view rest = trim(line.text.substr(6));
      std::size_t count = 0;
      auto [ptr, ec] =
          std::from_chars(rest.data(), rest.data() + rest.size(), count);
      if (ec != std::errc() || ptr != rest.data() + rest.size()) {
        throw ParseError(line.number, "malformed count line");
      }
      if (!block.empty()) {
        flush(line.number);
      }
      declared = {line.number, count};
      continue;
    }
    block.push_back(line);
  }
  if (!block.empty()) {
    flush(lines.empty() ? 1 : lines.back().number);
  }
  if (declared && declared->second != models.size()) {
    throw ParseError(declared->first,
                     "count line says " + std::to_string(declared->second) +
                         " but stream holds " + std::to_string(models.size()));
  }
  if (!declared && models.empty()) {
    throw ParseError(1, "empty input");
  }
  return models;
}

}  // namespace lasg
