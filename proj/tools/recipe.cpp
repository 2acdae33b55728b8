#include "recipe.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace fuchs::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string text) : s_(std::move(text)) {}

  BuiltGroup parse() {
    BuiltGroup g = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    g.recipe = s_;
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "recipe parse error at position " << pos_ << ": " << msg;
    throw recipe_error(os.str());
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("expected a name");
    return s_.substr(start, pos_ - start);
  }

  int number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected a number");
    return std::stoi(s_.substr(start, pos_ - start));
  }

  groups::ModuleKind module_kind() {
    std::size_t at = pos_;
    std::string name = word();
    auto kind = groups::parse_module_kind(name);
    if (!kind) {
      pos_ = at;
      fail("unknown module kind '" + name + "'");
    }
    return *kind;
  }

  BuiltGroup expr() {
    std::size_t at = pos_;
    std::string head = word();
    if (head == "cyclic") {
      expect(':');
      return {groups::build_cyclic(number()), std::nullopt, ""};
    }
    if (head == "dihedral") {
      expect(':');
      return {groups::build_dihedral(number()), std::nullopt, ""};
    }
    if (head == "quaternion") {
      expect(':');
      return {groups::build_quaternion(number()), std::nullopt, ""};
    }
    if (head == "product") {
      expect('(');
      BuiltGroup a = expr();
      expect(',');
      BuiltGroup b = expr();
      expect(')');
      return {groups::direct_product(a.group, b.group), std::nullopt, ""};
    }
    if (head == "sdp") {
      expect(':');
      groups::GroupAction act = groups::module_action(module_kind());
      groups::GroupPtr g = groups::semidirect_product(act);
      return {std::move(g), std::move(act), ""};
    }
    if (head == "iterate") {
      expect('(');
      groups::ModuleKind kind = module_kind();
      expect(',');
      int depth = number();
      expect(')');
      return {groups::iterated_family(kind, depth), std::nullopt, ""};
    }
    if (head == "file") {
      expect(':');
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ')') ++pos_;
      std::string path = s_.substr(start, pos_ - start);
      std::ifstream in(path);
      if (!in) {
        pos_ = start;
        fail("cannot open group file '" + path + "'");
      }
      return {groups::load_cayley(in), std::nullopt, ""};
    }
    pos_ = at;
    fail("unknown constructor '" + head + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

BuiltGroup parse_group_recipe(const std::string& text) {
  return Parser(text).parse();
}

}  // namespace fuchs::cli
