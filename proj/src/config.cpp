#include "courantx/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace courantx {

namespace {

struct Token {
  enum Kind { Number, Var, DVar, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind = End;
  std::string text;
  int index = -1;  // coordinate index for Var/DVar
  size_t pos = 0;
};

int coord_index_of(const std::string& name, int chart_dim) {
  static const std::string small_names[] = {"x", "y", "z", "w"};
  if (chart_dim <= 4) {
    for (int i = 0; i < chart_dim; ++i)
      if (name == small_names[i]) return i;
  }
  if (name.size() >= 2 && name[0] == 'x') {
    bool digits = true;
    for (size_t i = 1; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits = false;
    if (digits) {
      int idx = std::stoi(name.substr(1)) - 1;
      if (idx >= 0 && idx < chart_dim) return idx;
    }
  }
  return -1;
}

class Lexer {
 public:
  Lexer(const std::string& text, int chart_dim) : text_(text), n_(chart_dim) { advance(); }

  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    cur_ = Token{};
    cur_.pos = pos_;
    if (pos_ >= text_.size()) {
      cur_.kind = Token::End;
      return;
    }
    char c = text_[pos_];
    auto single = [&](Token::Kind k) {
      cur_.kind = k;
      cur_.text = std::string(1, c);
      ++pos_;
    };
    switch (c) {
      case '+': single(Token::Plus); return;
      case '-': single(Token::Minus); return;
      case '*': single(Token::Star); return;
      case '/': single(Token::Slash); return;
      case '^': single(Token::Caret); return;
      case '(': single(Token::LParen); return;
      case ')': single(Token::RParen); return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      cur_.kind = Token::Number;
      cur_.text = text_.substr(start, pos_ - start);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isalnum(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      std::string word = text_.substr(start, pos_ - start);
      if (word.size() > 1 && word[0] == 'd') {
        int idx = coord_index_of(word.substr(1), n_);
        if (idx >= 0) {
          cur_.kind = Token::DVar;
          cur_.text = word;
          cur_.index = idx;
          return;
        }
      }
      int idx = coord_index_of(word, n_);
      if (idx >= 0) {
        cur_.kind = Token::Var;
        cur_.text = word;
        cur_.index = idx;
        return;
      }
      throw ConfigError("unknown symbol '" + word + "' at column " +
                        std::to_string(start + 1));
    }
    throw ConfigError(std::string("unexpected character '") + c + "' at column " +
                      std::to_string(pos_ + 1));
  }

  const std::string& text_;
  int n_;
  size_t pos_ = 0;
  Token cur_;
};

class FormParser {
 public:
  FormParser(const std::string& text, int chart_dim)
      : lex_(text, chart_dim), n_(chart_dim) {}

  Form parse() {
    Form out = parse_sum();
    if (lex_.peek().kind != Token::End)
      throw ConfigError("trailing input at column " +
                        std::to_string(lex_.peek().pos + 1));
    return out;
  }

 private:
  Form parse_sum() {
    bool negate = false;
    if (lex_.peek().kind == Token::Minus) {
      lex_.take();
      negate = true;
    } else if (lex_.peek().kind == Token::Plus) {
      lex_.take();
    }
    Form acc = parse_term();
    if (negate) acc = -acc;
    while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
      bool minus = lex_.take().kind == Token::Minus;
      Form t = parse_term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  // A term is a juxtaposition of factors, optionally joined by '*'.
  Form parse_term() {
    Form acc = parse_factor();
    for (;;) {
      Token::Kind k = lex_.peek().kind;
      if (k == Token::Star) {
        lex_.take();
        acc = wedge(acc, parse_factor());
      } else if (k == Token::Number || k == Token::Var || k == Token::DVar ||
                 k == Token::LParen) {
        acc = wedge(acc, parse_factor());
      } else {
        return acc;
      }
    }
  }

  Form parse_factor() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Token::Number: {
        Rational r(Integer(lex_.take().text));
        if (lex_.peek().kind == Token::Slash) {
          lex_.take();
          if (lex_.peek().kind != Token::Number)
            throw ConfigError("expected denominator at column " +
                              std::to_string(lex_.peek().pos + 1));
          Integer den(lex_.take().text);
          if (den == 0) throw ConfigError("zero denominator");
          r /= Rational(den);
        }
        return Form::constant(n_, r);
      }
      case Token::Var: {
        Token v = lex_.take();
        unsigned exp = 1;
        if (lex_.peek().kind == Token::Caret) {
          lex_.take();
          if (lex_.peek().kind != Token::Number)
            throw ConfigError("expected exponent at column " +
                              std::to_string(lex_.peek().pos + 1));
          exp = static_cast<unsigned>(std::stoul(lex_.take().text));
        }
        Expo e(n_, 0);
        e[v.index] = exp;
        Poly p(n_);
        p.add_term(e, 1);
        return Form::from_poly(p);
      }
      case Token::DVar: {
        IndexSet I;
        I.push_back(lex_.take().index);
        while (lex_.peek().kind == Token::Caret) {
          lex_.take();
          if (lex_.peek().kind != Token::DVar)
            throw ConfigError("expected a d-token after '^' at column " +
                              std::to_string(lex_.peek().pos + 1));
          I.push_back(lex_.take().index);
        }
        return Form::basis(n_, I);
      }
      case Token::LParen: {
        lex_.take();
        Form inner = parse_sum();
        if (lex_.peek().kind != Token::RParen)
          throw ConfigError("expected ')' at column " +
                            std::to_string(lex_.peek().pos + 1));
        lex_.take();
        return inner;
      }
      default:
        throw ConfigError("expected a factor at column " +
                          std::to_string(t.pos + 1));
    }
  }

  Lexer lex_;
  int n_;
};

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Rational parse_rational(const std::string& text) {
  std::string t = trim(text);
  if (t.empty()) throw ConfigError("empty number");
  bool neg = false;
  size_t i = 0;
  if (t[0] == '-' || t[0] == '+') {
    neg = t[0] == '-';
    i = 1;
  }
  std::string num, den = "1";
  size_t slash = t.find('/');
  if (slash == std::string::npos) {
    num = t.substr(i);
  } else {
    num = t.substr(i, slash - i);
    den = trim(t.substr(slash + 1));
  }
  num = trim(num);
  for (const std::string& part : {num, den}) {
    if (part.empty()) throw ConfigError("malformed number '" + t + "'");
    for (char c : part)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ConfigError("malformed number '" + t + "'");
  }
  Rational r{Integer(num), Integer(den)};
  if (neg) r = -r;
  return r;
}

int parse_int(const std::string& text, const std::string& key) {
  try {
    size_t used = 0;
    int v = std::stoi(trim(text), &used);
    if (used != trim(text).size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': expected an integer, got '" +
                      trim(text) + "'");
  }
}

std::uint64_t parse_u64(const std::string& text, const std::string& key) {
  try {
    size_t used = 0;
    std::uint64_t v = std::stoull(trim(text), &used);
    if (used != trim(text).size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': expected an unsigned integer, got '" +
                      trim(text) + "'");
  }
}

}  // namespace

Form parse_form(const std::string& text, int chart_dim) {
  std::string t = trim(text);
  if (t.empty() || t == "0") return Form(chart_dim);
  return FormParser(t, chart_dim).parse();
}

void SuiteConfig::validate() const {
  if (chart_dim < 0) throw ConfigError("chart_dim must be >= 0");
  if (family != "quadratic" && chart_dim < 1)
    throw ConfigError("chart_dim must be >= 1 for this family");
  if (courant_k < 1) throw ConfigError("courant_k must be >= 1");
  if (samples < 1) throw ConfigError("samples must be >= 1");
  if (max_poly_degree < 0) throw ConfigError("max_poly_degree must be >= 0");
  if (family != "standard" && family != "twisted" && family != "quadratic" &&
      family != "commutative")
    throw ConfigError("unknown family '" + family + "'");
  if (twist_potential && family != "twisted")
    throw ConfigError("twist_potential requires family = twisted");
  if (open_twist && family != "twisted")
    throw ConfigError("open_twist requires family = twisted");
}

SuiteConfig parse_config_text(const std::string& text) {
  SuiteConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool lie_seen = false;
  int lie_rank = 0;
  std::vector<std::array<int, 3>> lie_entries_idx;
  std::vector<Rational> lie_entries_val;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "chart_dim") {
        cfg.chart_dim = parse_int(value, key);
      } else if (key == "courant_k") {
        cfg.courant_k = parse_int(value, key);
      } else if (key == "family") {
        cfg.family = value;
      } else if (key == "twist_potential") {
        cfg.twist_potential = value;
      } else if (key == "open_twist") {
        cfg.open_twist = value;
      } else if (key == "seed") {
        cfg.seed = parse_u64(value, key);
      } else if (key == "samples") {
        cfg.samples = parse_int(value, key);
      } else if (key == "max_poly_degree") {
        cfg.max_poly_degree = parse_int(value, key);
      } else if (key == "suites") {
        for (const std::string& s : split(value, ','))
          if (!trim(s).empty()) cfg.suites.push_back(trim(s));
      } else if (key == "lie_rank") {
        lie_rank = parse_int(value, key);
        lie_seen = true;
      } else if (key == "lie_structure") {
        // entries: "i j m = coeff" separated by ';', frame indices 1-based
        for (const std::string& entry : split(value, ';')) {
          std::string e = trim(entry);
          if (e.empty()) continue;
          size_t eeq = e.find("->");
          if (eeq == std::string::npos)
            throw ConfigError("lie_structure entry '" + e + "': expected i j m -> c");
          std::istringstream idx(e.substr(0, eeq));
          int i, j, m;
          if (!(idx >> i >> j >> m))
            throw ConfigError("lie_structure entry '" + e + "': expected three indices");
          lie_entries_idx.push_back({i, j, m});
          lie_entries_val.push_back(parse_rational(e.substr(eeq + 2)));
        }
        lie_seen = true;
      } else if (key == "gram") {
        for (const std::string& row : split(value, ';')) {
          std::string r = trim(row);
          if (r.empty()) continue;
          std::vector<Rational> vals;
          std::istringstream rs(r);
          std::string cell;
          while (rs >> cell) vals.push_back(parse_rational(cell));
          cfg.gram.push_back(std::move(vals));
        }
      } else {
        throw ConfigError("unknown key '" + key + "'");
      }
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (lie_seen) {
    if (lie_rank <= 0) throw ConfigError("lie_structure requires lie_rank");
    cfg.lie_c.assign(lie_rank,
                     std::vector<std::vector<Rational>>(
                         lie_rank, std::vector<Rational>(lie_rank, 0)));
    for (size_t t = 0; t < lie_entries_idx.size(); ++t) {
      auto [i, j, m] = lie_entries_idx[t];
      if (i < 1 || i > lie_rank || j < 1 || j > lie_rank || m < 1 || m > lie_rank)
        throw ConfigError("lie_structure index out of range");
      cfg.lie_c[i - 1][j - 1][m - 1] += lie_entries_val[t];
      cfg.lie_c[j - 1][i - 1][m - 1] -= lie_entries_val[t];
    }
  }
  cfg.validate();
  return cfg;
}

SuiteConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

CourantStructure structure_from_config(const SuiteConfig& cfg) {
  cfg.validate();
  const int n = cfg.chart_dim, k = cfg.courant_k;
  if (cfg.family == "standard") return standard_family(n, k);
  if (cfg.family == "twisted") {
    if (cfg.open_twist) {
      Form H = parse_form(*cfg.open_twist, n);
      if (!H.is_zero() && H.degree() != k + 2)
        throw ConfigError("open_twist must have degree k+2");
      return twisted_family(n, k, H, /*allow_open_twist=*/true);
    }
    Form B(n);
    if (cfg.twist_potential) {
      B = parse_form(*cfg.twist_potential, n);
      if (!B.is_zero() && B.degree() != k + 1)
        throw ConfigError("twist_potential must have degree k+1");
    }
    return twisted_family(n, k, de_rham(B));
  }
  if (cfg.family == "quadratic") {
    if (!cfg.lie_c.empty()) {
      auto gram = cfg.gram;
      if (gram.empty())
        throw ConfigError("quadratic family with lie_structure needs a gram matrix");
      return quadratic_family(cfg.lie_c, gram);
    }
    return quadratic_so3();
  }
  return commutative_family(n, k);
}

}  // namespace courantx
