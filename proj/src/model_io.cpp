#include "gromov/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gromov/class_expr.hpp"
#include "gromov/error.hpp"

namespace gromov {

using json = nlohmann::json;

namespace {

// Minimal scanner that walks raw JSON text along a pointer, counting lines.
class PointerScanner {
public:
  explicit PointerScanner(std::string_view text) : text_(text) {}

  int locate(const std::vector<std::string> &tokens) {
    skip_ws();
    for (const auto &token : tokens) {
      if (pos_ >= text_.size())
        return 0;
      if (text_[pos_] == '{') {
        if (!enter_member(token))
          return 0;
      } else if (text_[pos_] == '[') {
        if (!enter_element(token))
          return 0;
      } else {
        return 0;
      }
      skip_ws();
    }
    return line_;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n')
        ++line_;
      else if (c != ' ' && c != '\t' && c != '\r')
        break;
      ++pos_;
    }
  }

  std::string read_string() {
    std::string out;
    ++pos_; // opening quote
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size())
        out.push_back(text_[++pos_]);
      else
        out.push_back(text_[pos_]);
      ++pos_;
    }
    ++pos_; // closing quote
    return out;
  }

  void skip_value() {
    skip_ws();
    if (pos_ >= text_.size())
      return;
    const char c = text_[pos_];
    if (c == '"') {
      read_string();
    } else if (c == '{' || c == '[') {
      const char close = c == '{' ? '}' : ']';
      ++pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == close) {
        ++pos_;
        return;
      }
      while (pos_ < text_.size()) {
        if (c == '{') {
          skip_ws();
          read_string();
          skip_ws();
          ++pos_; // ':'
        }
        skip_value();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        ++pos_; // close
        return;
      }
    } else {
      while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != '}' &&
             text_[pos_] != ']' && text_[pos_] != '\n' && text_[pos_] != ' ')
        ++pos_;
    }
  }

  bool enter_member(const std::string &key) {
    ++pos_; // '{'
    while (true) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != '"')
        return false;
      const std::string name = read_string();
      skip_ws();
      ++pos_; // ':'
      skip_ws();
      if (name == key)
        return true;
      skip_value();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ',')
        return false;
      ++pos_;
    }
  }

  bool enter_element(const std::string &index_text) {
    std::size_t index = 0;
    try {
      index = std::stoul(index_text);
    } catch (...) {
      return false;
    }
    ++pos_; // '['
    skip_ws();
    for (std::size_t i = 0; i < index; ++i) {
      skip_value();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ',')
        return false;
      ++pos_;
      skip_ws();
    }
    return pos_ < text_.size() && text_[pos_] != ']';
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

std::vector<std::string> split_pointer(std::string_view pointer) {
  std::vector<std::string> tokens;
  if (pointer.empty())
    return tokens;
  std::size_t pos = 1;
  while (pos <= pointer.size()) {
    std::size_t slash = pointer.find('/', pos);
    if (slash == std::string_view::npos)
      slash = pointer.size();
    std::string_view raw = pointer.substr(pos, slash - pos);
    std::string token;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] == '~' && i + 1 < raw.size()) {
        token.push_back(raw[i + 1] == '1' ? '/' : '~');
        ++i;
      } else {
        token.push_back(raw[i]);
      }
    }
    tokens.push_back(std::move(token));
    pos = slash + 1;
  }
  return tokens;
}

class Loader {
public:
  explicit Loader(std::string_view text) : text_(text) {}

  ManifoldModel load() {
    try {
      doc_ = json::parse(text_);
    } catch (const json::parse_error &e) {
      throw ModelError("", line_of_offset(e.byte), "invalid JSON: " +
                                                        std::string(e.what()));
    }
    if (!doc_.is_object())
      fail("", "model document must be a JSON object");

    if (!require(doc_, "/name", "name").is_string())
      fail("/name", "must be a string");
    const std::string name = doc_["name"].get<std::string>();
    const auto symbols = read_basis();
    const std::size_t n = symbols.size();
    const auto gram = read_gram(n);
    std::optional<int> b2plus;
    if (doc_.contains("b2plus")) {
      const auto &v = doc_["b2plus"];
      if (!v.is_number_integer() || v.get<long long>() < 0)
        fail("/b2plus", "must be a non-negative integer");
      b2plus = v.get<int>();
    }
    const auto area = read_area(n);

    // Lattice built with a provisional K of zeros so that K itself may be a
    // class expression; the real K is checked for parity below.
    auto provisional = std::make_shared<const IntersectionLattice>(
        name, symbols, make_even_gram(gram), std::vector<Int>(n, 0), area);
    const std::vector<Int> k = read_class_field(provisional, "/K", doc_, "K");
    check_characteristic(symbols, gram, k);

    LatticePtr lattice;
    try {
      lattice = std::make_shared<const IntersectionLattice>(name, symbols, gram,
                                                            k, area, b2plus);
    } catch (const DomainError &e) {
      fail("", e.what());
    }

    bool minimal = false;
    if (doc_.contains("minimal")) {
      if (!doc_["minimal"].is_boolean())
        fail("/minimal", "must be true or false");
      minimal = doc_["minimal"].get<bool>();
    }

    std::vector<HClass> exceptional;
    if (doc_.contains("exceptional")) {
      const auto &arr = doc_["exceptional"];
      if (!arr.is_array())
        fail("/exceptional", "must be an array of class expressions");
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string path = "/exceptional/" + std::to_string(i);
        HClass e = parse_expr(lattice, path, arr[i]);
        if (pair(e, e) != -1 || c1(e) != 1)
          fail(path, "exceptional class " + format_class(e) +
                         " must have square -1 and c1 = 1");
        exceptional.push_back(e);
      }
      if (minimal && !exceptional.empty())
        fail("/minimal", "a minimal model cannot list exceptional classes");
    }

    ClassMap<Int> gr0 = read_int_table(lattice, "gr0_table", "value", true);
    ClassMap<Int> spheres = read_int_table(lattice, "sphere_table", "count", false);
    ClassMap<std::vector<TorusEntry>> tori = read_torus_table(lattice);

    try {
      return ManifoldModel(lattice, std::move(exceptional), minimal,
                           std::move(gr0), std::move(tori), std::move(spheres));
    } catch (const DomainError &e) {
      fail("", e.what());
    }
  }

private:
  [[noreturn]] void fail(const std::string &path, const std::string &what) {
    throw ModelError(path, path.empty() ? 0 : locate_json_pointer(text_, path),
                     what);
  }

  int line_of_offset(std::size_t offset) const {
    int line = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i)
      if (text_[i] == '\n')
        ++line;
    return line;
  }

  const json &require(const json &obj, const std::string &path,
                      const char *key) {
    if (!obj.contains(key))
      fail(path.substr(0, path.rfind('/')), std::string("missing field '") +
                                                key + "'");
    return obj.at(key);
  }

  std::vector<std::string> read_basis() {
    const auto &arr = require(doc_, "/basis", "basis");
    if (!arr.is_array() || arr.empty())
      fail("/basis", "must be a non-empty array of symbols");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (!arr[i].is_string())
        fail("/basis/" + std::to_string(i), "basis symbol must be a string");
      out.push_back(arr[i].get<std::string>());
    }
    try {
      // Reuse the lattice's symbol checks on a trivial form.
      std::vector<std::vector<Int>> zero(out.size(),
                                         std::vector<Int>(out.size(), 0));
      IntersectionLattice probe("probe", out, zero,
                                std::vector<Int>(out.size(), 0),
                                std::vector<Rational>(out.size(), 0));
    } catch (const DomainError &e) {
      fail("/basis", e.what());
    }
    return out;
  }

  std::vector<std::vector<Int>> read_gram(std::size_t n) {
    const auto &rows = require(doc_, "/gram", "gram");
    if (!rows.is_array() || rows.size() != n)
      fail("/gram", "must be a " + std::to_string(n) + "x" + std::to_string(n) +
                        " integer matrix");
    std::vector<std::vector<Int>> gram(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i) {
      const std::string row_path = "/gram/" + std::to_string(i);
      if (!rows[i].is_array() || rows[i].size() != n)
        fail(row_path, "row must have " + std::to_string(n) + " integers");
      for (std::size_t j = 0; j < n; ++j) {
        if (!rows[i][j].is_number_integer())
          fail(row_path + "/" + std::to_string(j), "must be an integer");
        gram[i][j] = rows[i][j].get<Int>();
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (gram[i][j] != gram[j][i])
          fail("/gram/" + std::to_string(j) + "/" + std::to_string(i),
               "gram matrix is not symmetric: entry (" + std::to_string(j) +
                   "," + std::to_string(i) + ") differs from (" +
                   std::to_string(i) + "," + std::to_string(j) + ")");
    return gram;
  }

  // Any even matrix admits K = 0 as characteristic vector; the provisional
  // lattice only serves expression parsing.
  static std::vector<std::vector<Int>>
  make_even_gram(const std::vector<std::vector<Int>> &gram) {
    auto g = gram;
    for (std::size_t i = 0; i < g.size(); ++i)
      g[i][i] = 0;
    return g;
  }

  void check_characteristic(const std::vector<std::string> &symbols,
                            const std::vector<std::vector<Int>> &gram,
                            const std::vector<Int> &k) {
    const std::size_t n = symbols.size();
    for (std::size_t i = 0; i < n; ++i) {
      Int ki = 0;
      for (std::size_t j = 0; j < n; ++j)
        ki = checked::add(ki, checked::mul(k[j], gram[j][i]));
      if ((gram[i][i] - ki) % 2 != 0)
        fail("/K", "K is not characteristic: Q(" + symbols[i] + "," +
                       symbols[i] + ") and K." + symbols[i] +
                       " differ in parity");
    }
  }

  std::vector<Rational> read_area(std::size_t n) {
    const auto &arr = require(doc_, "/area", "area");
    if (!arr.is_array() || arr.size() != n)
      fail("/area", "must list " + std::to_string(n) + " rationals");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < n; ++i) {
      const std::string path = "/area/" + std::to_string(i);
      try {
        if (arr[i].is_number_integer())
          out.emplace_back(arr[i].get<Int>());
        else if (arr[i].is_string())
          out.push_back(parse_rational(arr[i].get<std::string>()));
        else
          fail(path, "area must be an integer or a \"p/q\" string");
      } catch (const ParseError &e) {
        fail(path, e.what());
      }
    }
    return out;
  }

  HClass parse_expr(const LatticePtr &lattice, const std::string &path,
                    const json &v) {
    if (v.is_string()) {
      try {
        return parse_class(lattice, v.get<std::string>());
      } catch (const Error &e) {
        fail(path, e.what());
      }
    }
    if (v.is_array()) {
      if (v.size() != lattice->rank())
        fail(path, "coordinate array must have length " +
                       std::to_string(lattice->rank()));
      std::vector<Int> c;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number_integer())
          fail(path + "/" + std::to_string(i), "must be an integer");
        c.push_back(v[i].get<Int>());
      }
      return HClass(lattice, std::move(c));
    }
    fail(path, "class must be an expression string or a coordinate array");
  }

  std::vector<Int> read_class_field(const LatticePtr &lattice,
                                    const std::string &path, const json &obj,
                                    const char *key) {
    return parse_expr(lattice, path, require(obj, path, key)).coords();
  }

  void check_area(const HClass &key, const std::string &path) {
    if (omega_area(key) <= 0)
      fail(path, "table key " + format_class(key) +
                     " must have positive area, has " +
                     to_string(omega_area(key)));
  }

  ClassMap<Int> read_int_table(const LatticePtr &lattice, const char *table,
                               const char *field, bool allow_negative) {
    ClassMap<Int> out;
    if (!doc_.contains(table))
      return out;
    const std::string base = std::string("/") + table;
    const auto &arr = doc_[table];
    if (!arr.is_array())
      fail(base, "must be an array of entries");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string path = base + "/" + std::to_string(i);
      if (!arr[i].is_object())
        fail(path, std::string("entry must be an object {class, ") + field + "}");
      HClass key = parse_expr(lattice, path + "/class",
                              require(arr[i], path + "/class", "class"));
      check_area(key, path + "/class");
      const auto &v = require(arr[i], path + "/" + field, field);
      if (!v.is_number_integer())
        fail(path + "/" + field, "must be an integer");
      const Int value = v.get<Int>();
      if (!allow_negative && value < 0)
        fail(path + "/" + field, "must be non-negative");
      if (!out.emplace(key, value).second)
        fail(path + "/class", "duplicate entry for " + format_class(key));
    }
    return out;
  }

  ClassMap<std::vector<TorusEntry>> read_torus_table(const LatticePtr &lattice) {
    ClassMap<std::vector<TorusEntry>> out;
    if (!doc_.contains("torus_table"))
      return out;
    const auto &arr = doc_["torus_table"];
    if (!arr.is_array())
      fail("/torus_table", "must be an array of entries");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string path = "/torus_table/" + std::to_string(i);
      if (!arr[i].is_object())
        fail(path, "entry must be an object {class, label, cover}");
      HClass key = parse_expr(lattice, path + "/class",
                              require(arr[i], path + "/class", "class"));
      check_area(key, path + "/class");
      if (key.content() != 1)
        fail(path + "/class", "torus class " + format_class(key) +
                                  " must be primitive");
      if (pair(key, key) != 0 || c1(key) != 0)
        fail(path + "/class", "torus class " + format_class(key) +
                                  " must have square 0 and c1 = 0");
      // An entry without a label records the class with no tori at all.
      if (!arr[i].contains("label")) {
        if (arr[i].contains("cover"))
          fail(path + "/cover", "cover given without a label");
        out[key];
        continue;
      }
      const auto &label = arr[i]["label"];
      if (!label.is_string())
        fail(path + "/label", "label must be a string such as \"+0\"");
      TorusEntry entry{TorusLabel(true, 0), 1};
      try {
        entry.label = TorusLabel::parse(label.get<std::string>());
      } catch (const ParseError &e) {
        fail(path + "/label", e.what());
      }
      if (arr[i].contains("cover")) {
        const auto &cover = arr[i]["cover"];
        if (!cover.is_number_integer() || cover.get<Int>() < 1)
          fail(path + "/cover", "cover must be a positive integer");
        entry.cover = cover.get<Int>();
      }
      out[key].push_back(entry);
    }
    return out;
  }

  std::string_view text_;
  json doc_;
};

} // namespace

int locate_json_pointer(std::string_view text, std::string_view pointer) {
  return PointerScanner(text).locate(split_pointer(pointer));
}

ManifoldModel load_model_text(std::string_view text) {
  return Loader(text).load();
}

ManifoldModel load_model_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw ModelError("", 0, "cannot open model file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_model_text(buffer.str());
}

std::string dump_model(const ManifoldModel &model) {
  const auto &lat = *model.lattice();
  json doc;
  doc["name"] = lat.name();
  doc["basis"] = lat.symbols();
  json gram = json::array();
  for (std::size_t i = 0; i < lat.rank(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < lat.rank(); ++j)
      row.push_back(lat.gram(i, j));
    gram.push_back(row);
  }
  doc["gram"] = gram;
  doc["K"] = format_class(model.canonical());
  json area = json::array();
  for (const auto &a : lat.area())
    area.push_back(to_string(a));
  doc["area"] = area;
  if (lat.b2plus_override())
    doc["b2plus"] = *lat.b2plus_override();
  json exc = json::array();
  for (const auto &e : model.exceptional())
    exc.push_back(format_class(e));
  doc["exceptional"] = exc;
  doc["minimal"] = model.minimal();
  json gr0 = json::array();
  for (const auto &[k, v] : model.gr0_table())
    gr0.push_back({{"class", format_class(k)}, {"value", v}});
  doc["gr0_table"] = gr0;
  json tori = json::array();
  for (const auto &[k, list] : model.torus_table()) {
    if (list.empty())
      tori.push_back({{"class", format_class(k)}});
    for (const auto &t : list)
      tori.push_back(
          {{"class", format_class(k)}, {"label", t.label.str()}, {"cover", t.cover}});
  }
  doc["torus_table"] = tori;
  json spheres = json::array();
  for (const auto &[k, v] : model.sphere_table())
    spheres.push_back({{"class", format_class(k)}, {"count", v}});
  doc["sphere_table"] = spheres;
  return doc.dump(2) + "\n";
}

} // namespace gromov
