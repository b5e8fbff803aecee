#include "unitlab/spec_dsl.hpp"

#include <algorithm>
#include <cctype>

namespace unitlab {

namespace {

const char* kConstructors[] = {"cyclic",   "elem_abelian", "extraspecial", "modular",
                               "dihedral", "quaternion",   "direct",       "central"};

bool is_constructor(const std::string& s) {
  return std::find(std::begin(kConstructors), std::end(kConstructors), s) !=
         std::end(kConstructors);
}

struct Token {
  enum class Type { Ident, Int, LParen, RParen, Comma, OpDirect, OpCentral, End };
  Type type = Token::Type::End;
  std::string text;
  long long value = 0;
  int line = 1, column = 1;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  size_t pos = 0;
  int line = 1, column = 1;
  auto step = [&]() {
    if (text[pos] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++pos;
  };
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      step();
      continue;
    }
    Token t;
    t.line = line;
    t.column = column;
    if (c == '(' || c == ')' || c == ',') {
      t.type = c == '(' ? Token::Type::LParen : c == ')' ? Token::Type::RParen : Token::Type::Comma;
      t.text = std::string(1, c);
      step();
      out.push_back(std::move(t));
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        num += text[pos];
        step();
      }
      t.type = Token::Type::Int;
      t.text = num;
      t.value = std::stoll(num);
      out.push_back(std::move(t));
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                   text[pos] == '_' || text[pos] == '^')) {
        id += text[pos];
        step();
      }
      if (id == "x" || id == "Y") {
        t.type = id == "x" ? Token::Type::OpDirect : Token::Type::OpCentral;
        t.text = id;
        out.push_back(std::move(t));
        continue;
      }
      // Whitespace-free infix like ")xcyclic(" lexes as one word; split the
      // leading operator off when the remainder is a constructor.
      if (id.size() > 1 && (id[0] == 'x' || id[0] == 'Y') && is_constructor(id.substr(1))) {
        Token op;
        op.type = id[0] == 'x' ? Token::Type::OpDirect : Token::Type::OpCentral;
        op.text = std::string(1, id[0]);
        op.line = t.line;
        op.column = t.column;
        out.push_back(std::move(op));
        t.column += 1;
        id = id.substr(1);
      }
      t.type = Token::Type::Ident;
      t.text = id;
      out.push_back(std::move(t));
      continue;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", line, column);
  }
  Token end;
  end.type = Token::Type::End;
  end.text = "<end>";
  end.line = line;
  end.column = column;
  out.push_back(std::move(end));
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  GroupSpec parse() {
    GroupSpec spec = expr();
    const Token& t = peek();
    if (t.type != Token::Type::End)
      throw ParseError("unexpected trailing input '" + t.text + "'", t.line, t.column);
    return spec;
  }

 private:
  const Token& peek() const { return tokens_[i_]; }
  Token next() { return tokens_[i_ == tokens_.size() - 1 ? i_ : i_++]; }

  GroupSpec expr() {
    GroupSpec left = primary();
    while (peek().type == Token::Type::OpDirect || peek().type == Token::Type::OpCentral) {
      Token op = next();
      GroupSpec right = primary();
      GroupSpec node;
      node.kind = op.type == Token::Type::OpDirect ? GroupSpec::Kind::Direct
                                                   : GroupSpec::Kind::Central;
      node.children.push_back(std::move(left));
      node.children.push_back(std::move(right));
      left = std::move(node);
    }
    return left;
  }

  GroupSpec primary() {
    Token name = next();
    if (name.type != Token::Type::Ident)
      throw ParseError("expected a constructor name, got '" + name.text + "'", name.line,
                       name.column);
    if (!is_constructor(name.text))
      throw ParseError("unknown constructor '" + name.text + "'", name.line, name.column);
    expect(Token::Type::LParen, "(");

    GroupSpec spec;
    if (name.text == "cyclic" || name.text == "elem_abelian" || name.text == "modular") {
      spec.kind = name.text == "cyclic"         ? GroupSpec::Kind::Cyclic
                  : name.text == "elem_abelian" ? GroupSpec::Kind::ElemAbelian
                                                : GroupSpec::Kind::Modular;
      spec.p = int_arg(name);
      expect(Token::Type::Comma, ",");
      spec.n = int_arg(name);
    } else if (name.text == "extraspecial") {
      spec.kind = GroupSpec::Kind::Extraspecial;
      spec.p = int_arg(name);
      expect(Token::Type::Comma, ",");
      Token kind = next();
      if (kind.type != Token::Type::Ident ||
          (kind.text != "p" && kind.text != "p2" && kind.text != "p^2"))
        throw ParseError("extraspecial exponent kind must be 'p' or 'p2'", kind.line, kind.column);
      spec.exp_kind = kind.text == "p" ? ExtraspecialExp::P : ExtraspecialExp::P2;
    } else if (name.text == "dihedral" || name.text == "quaternion") {
      spec.kind = name.text == "dihedral" ? GroupSpec::Kind::Dihedral : GroupSpec::Kind::Quaternion;
      spec.p = 2;
      spec.n = int_arg(name);
      if (spec.n != 8)
        throw ParseError(name.text + " supports only order 8", name.line, name.column);
    } else {  // direct, central
      spec.kind = name.text == "direct" ? GroupSpec::Kind::Direct : GroupSpec::Kind::Central;
      spec.children.push_back(expr());
      expect(Token::Type::Comma, ",");
      spec.children.push_back(expr());
    }
    expect(Token::Type::RParen, ")");
    return spec;
  }

  int int_arg(const Token& ctor) {
    Token t = next();
    if (t.type != Token::Type::Int)
      throw ParseError("constructor '" + ctor.text + "' expects an integer argument here", t.line,
                       t.column);
    if (t.value < 1 || t.value > 1000000) throw ParseError("argument out of range", t.line, t.column);
    return static_cast<int>(t.value);
  }

  void expect(Token::Type type, const char* what) {
    Token t = next();
    if (t.type != type)
      throw ParseError("expected '" + std::string(what) + "', got '" + t.text + "'", t.line,
                       t.column);
  }

  std::vector<Token> tokens_;
  size_t i_ = 0;
};

}  // namespace

GroupSpec parse_group_spec(std::string_view text) { return Parser(text).parse(); }

bool operator==(const GroupSpec& a, const GroupSpec& b) {
  return a.kind == b.kind && a.p == b.p && a.n == b.n &&
         (a.kind != GroupSpec::Kind::Extraspecial || a.exp_kind == b.exp_kind) &&
         a.children == b.children;
}

std::string GroupSpec::str() const {
  switch (kind) {
    case Kind::Cyclic:
      return "cyclic(" + std::to_string(p) + "," + std::to_string(n) + ")";
    case Kind::ElemAbelian:
      return "elem_abelian(" + std::to_string(p) + "," + std::to_string(n) + ")";
    case Kind::Extraspecial:
      return "extraspecial(" + std::to_string(p) + "," +
             (exp_kind == ExtraspecialExp::P ? "p" : "p2") + ")";
    case Kind::Modular:
      return "modular(" + std::to_string(p) + "," + std::to_string(n) + ")";
    case Kind::Dihedral:
      return "dihedral(8)";
    case Kind::Quaternion:
      return "quaternion(8)";
    case Kind::Direct:
      // Left-associative infix; a compound right operand needs the named form.
      if (children[1].children.empty())
        return children[0].str() + "x" + children[1].str();
      return "direct(" + children[0].str() + "," + children[1].str() + ")";
    case Kind::Central:
      return "central(" + children[0].str() + "," + children[1].str() + ")";
  }
  return "";
}

PGroup evaluate(const GroupSpec& spec, int cap) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic:
      return build_cyclic(Prime(spec.p), spec.n, cap);
    case GroupSpec::Kind::ElemAbelian:
      return build_elementary_abelian(Prime(spec.p), spec.n, cap);
    case GroupSpec::Kind::Extraspecial:
      return build_extraspecial(Prime(spec.p), spec.exp_kind, cap);
    case GroupSpec::Kind::Modular:
      return build_modular_maximal_cyclic(Prime(spec.p), spec.n, cap);
    case GroupSpec::Kind::Dihedral:
      return build_dihedral8();
    case GroupSpec::Kind::Quaternion:
      return build_quaternion8();
    case GroupSpec::Kind::Direct: {
      PGroup left = evaluate(spec.children[0], cap);
      PGroup right = evaluate(spec.children[1], cap);
      return direct_product(left, right, cap);
    }
    case GroupSpec::Kind::Central: {
      PGroup left = evaluate(spec.children[0], cap);
      PGroup right = evaluate(spec.children[1], cap);
      return central_product(left, right, default_amalgam(right), cap);
    }
  }
  throw Error("unreachable");
}

}  // namespace unitlab
