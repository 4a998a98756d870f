#include "mbx/table_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "mbx/error.hpp"

namespace mbx::chartab {

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

/// Whitespace-separated tokens with positions; comments stripped.
std::vector<Token> tokenize_line(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != '#' && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({std::string(line.substr(start, i - start)), line_no, start + 1});
  }
  return out;
}

Int parse_int_token(const Token& t) {
  try {
    return parse_int(t.text);
  } catch (const Error&) {
    throw ParseError(t.line, t.column, "expected an integer, found '" + t.text + "'");
  }
}

void check_class_equation(const ClassData& d) {
  if (d.centralizers.empty()) throw ConsistencyError("no classes");
  if (d.centralizers[0] != d.order) throw ConsistencyError("first centralizer must equal |G|");
  Rational sum = 0;
  for (const Int& z : d.centralizers) {
    if (z <= 0) throw ConsistencyError("non-positive centralizer order");
    sum += ratio(d.order, z);
  }
  if (sum != Rational(d.order)) {
    throw ConsistencyError("class equation fails: sum |G|/z = " + to_string(sum) + " != " + d.order.get_str());
  }
  if (d.degrees) {
    Int squares = 0;
    for (const Int& x : *d.degrees) squares += x * x;
    if (squares != d.order) {
      throw ConsistencyError("Burnside identity fails: sum d^2 = " + squares.get_str() + " != " + d.order.get_str());
    }
  }
}

}  // namespace

void write_table(std::ostream& out, const CharacterTable& t) {
  out << "group " << t.name << "\n";
  out << "order " << t.order.get_str() << "\n";
  out << "classes " << t.k() << "\n";
  out << "centralizers";
  for (const Int& z : t.centralizers) out << ' ' << z.get_str();
  out << "\n";
  if (!t.degrees.empty()) {
    out << "degrees";
    for (const Int& d : t.degrees) out << ' ' << d.get_str();
    out << "\n";
  }
  for (std::size_t r = 0; r < t.values.size(); ++r) {
    out << "char " << r << ":";
    for (const auto& v : t.values[r]) out << ' ' << v.to_string();
    out << "\n";
  }
}

std::string write_table(const CharacterTable& t) {
  std::ostringstream out;
  write_table(out, t);
  return out.str();
}

ClassData parse_class_data(std::string_view text) {
  ClassData d;
  bool have_order = false;
  std::optional<std::size_t> k;
  std::vector<Int>* pending = nullptr;  // integer list still being filled
  std::size_t pending_line = 0;
  std::map<std::size_t, std::vector<Cyclotomic>> rows;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    ++line_no;
    std::vector<Token> tokens = tokenize_line(line, line_no);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }

    std::size_t first = 0;
    const std::string& key = tokens[0].text;
    bool is_key = key == "group" || key == "order" || key == "classes" || key == "centralizers" ||
                  key == "degrees" || key == "char";
    if (pending != nullptr && !is_key) {
      for (const Token& t : tokens) pending->push_back(parse_int_token(t));
      if (k && pending->size() > *k) throw ParseError(line_no, tokens.back().column, "too many integers");
      continue;
    }
    if (pending != nullptr && k && pending->size() != *k) {
      throw ParseError(pending_line, 1, "expected " + std::to_string(*k) + " integers, found " + std::to_string(pending->size()));
    }
    pending = nullptr;

    if (key == "group") {
      if (tokens.size() < 2) throw ParseError(line_no, tokens[0].column, "missing group name");
      std::size_t start = tokens[1].column - 1;
      d.name = std::string(line.substr(start, tokens.back().column - 1 + tokens.back().text.size() - start));
    } else if (key == "order") {
      if (tokens.size() != 2) throw ParseError(line_no, tokens[0].column, "expected 'order <int>'");
      d.order = parse_int_token(tokens[1]);
      if (d.order <= 0) throw ParseError(line_no, tokens[1].column, "order must be positive");
      have_order = true;
    } else if (key == "classes") {
      if (tokens.size() != 2) throw ParseError(line_no, tokens[0].column, "expected 'classes <k>'");
      Int kk = parse_int_token(tokens[1]);
      if (kk <= 0 || kk > 1000000) throw ParseError(line_no, tokens[1].column, "bad class count");
      k = kk.get_ui();
    } else if (key == "centralizers" || key == "degrees") {
      if (!k) throw ParseError(line_no, tokens[0].column, "'classes' must precede '" + key + "'");
      std::vector<Int>* list = &d.centralizers;
      if (key == "degrees") {
        d.degrees.emplace();
        list = &*d.degrees;
      }
      if (!list->empty()) throw ParseError(line_no, tokens[0].column, "duplicate '" + key + "'");
      for (first = 1; first < tokens.size(); ++first) list->push_back(parse_int_token(tokens[first]));
      if (list->size() > *k) throw ParseError(line_no, tokens.back().column, "too many integers");
      pending = list;
      pending_line = line_no;
    } else if (key == "char") {
      if (!k) throw ParseError(line_no, tokens[0].column, "'classes' must precede 'char'");
      if (tokens.size() < 2) throw ParseError(line_no, tokens[0].column, "expected 'char <i>:'");
      std::string index = tokens[1].text;
      std::size_t value_start = 2;
      if (!index.empty() && index.back() == ':') {
        index.pop_back();
      } else if (tokens.size() > 2 && tokens[2].text == ":") {
        value_start = 3;
      } else {
        throw ParseError(line_no, tokens[1].column + tokens[1].text.size(), "expected ':'");
      }
      Int r;
      try {
        r = parse_int(index);
      } catch (const Error&) {
        throw ParseError(line_no, tokens[1].column, "bad row index '" + index + "'");
      }
      if (r < 0 || r >= *k) throw ParseError(line_no, tokens[1].column, "row index out of range");
      std::size_t row = r.get_ui();
      if (rows.count(row)) throw ParseError(line_no, tokens[1].column, "duplicate row " + index);
      if (tokens.size() - value_start != *k) {
        throw ParseError(line_no, tokens[0].column, "expected " + std::to_string(*k) + " values, found " + std::to_string(tokens.size() - value_start));
      }
      std::vector<Cyclotomic> values;
      for (std::size_t i = value_start; i < tokens.size(); ++i) {
        try {
          values.push_back(Cyclotomic::parse(tokens[i].text));
        } catch (const ParseError& e) {
          throw ParseError(line_no, tokens[i].column + e.column() - 1, "bad value '" + tokens[i].text + "'");
        }
      }
      rows.emplace(row, std::move(values));
    } else {
      throw ParseError(line_no, tokens[0].column, "unknown keyword '" + key + "'");
    }
    if (end == text.size()) break;
  }
  if (pending != nullptr && k && pending->size() != *k) {
    throw ParseError(pending_line, 1, "expected " + std::to_string(*k) + " integers, found " + std::to_string(pending->size()));
  }
  if (!have_order) throw ParseError(line_no, 1, "missing 'order'");
  if (!k) throw ParseError(line_no, 1, "missing 'classes'");
  if (d.centralizers.size() != *k) throw ParseError(line_no, 1, "missing 'centralizers'");
  if (!rows.empty()) {
    if (rows.size() != *k) throw ParseError(line_no, 1, "expected " + std::to_string(*k) + " char rows");
    d.values.emplace();
    for (auto& [i, row] : rows) d.values->push_back(std::move(row));
    for (std::size_t r = 0; r < *k; ++r) {
      if (!(*d.values)[r][0].is_rational() || (*d.values)[r][0].rational() <= 0) {
        throw ConsistencyError("row " + std::to_string(r) + " has no positive integer degree");
      }
    }
    if (d.degrees) {
      for (std::size_t r = 0; r < *k; ++r) {
        if ((*d.values)[r][0].rational() != (*d.degrees)[r]) {
          throw ConsistencyError("degree of row " + std::to_string(r) + " disagrees with its identity value");
        }
      }
    } else {
      d.degrees.emplace();
      for (const auto& row : *d.values) d.degrees->push_back(row[0].rational());
    }
  }
  check_class_equation(d);
  return d;
}

CharacterTable to_table(const ClassData& data) {
  if (!data.values) throw MissingInput("class data for " + data.name + " has no character values");
  CharacterTable t;
  t.name = data.name;
  t.order = data.order;
  t.centralizers = data.centralizers;
  t.values = *data.values;
  complete(t);
  return t;
}

CharacterTable parse_table(std::string_view text) {
  ClassData d = parse_class_data(text);
  if (!d.values) throw ParseError(1, 1, "table file has no 'char' rows");
  return to_table(d);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace mbx::chartab
