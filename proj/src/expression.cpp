// Copyright 2026 The lipfree Authors
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

// Recursive descent over
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' unary)?
//   atom   := integer | 'n' | '(' expr ')'
//
// parsed once into a small tree, evaluated per n with overflow checks.

#include <cctype>
#include <memory>

#include "lipfree/families.hpp"

namespace lipfree {
namespace {

struct Node {
  char op = 0;  // 0 literal, 'n' variable, otherwise binary op or '~' (negate)
  long value = 0;
  std::shared_ptr<Node> lhs, rhs;
};
using NodePtr = std::shared_ptr<Node>;

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("index expression \"" + s_ + "\": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  static NodePtr binary(char op, NodePtr l, NodePtr r) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
  }
  NodePtr expr() {
    NodePtr l = term();
    while (true) {
      if (eat('+')) l = binary('+', l, term());
      else if (eat('-')) l = binary('-', l, term());
      else return l;
    }
  }
  NodePtr term() {
    NodePtr l = unary();
    while (true) {
      if (eat('*')) l = binary('*', l, unary());
      else if (eat('/')) l = binary('/', l, unary());
      else return l;
    }
  }
  NodePtr unary() {
    if (eat('-')) return binary('~', unary(), nullptr);
    return power();
  }
  NodePtr power() {
    NodePtr base = atom();
    if (eat('^')) return binary('^', base, unary());
    return base;
  }
  NodePtr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      if (!eat(')')) fail("missing ')'");
      return e;
    }
    if (c == 'n') {
      ++pos_;
      auto v = std::make_shared<Node>();
      v->op = 'n';
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        if (__builtin_mul_overflow(v, 10L, &v) ||
            __builtin_add_overflow(v, static_cast<long>(s_[pos_] - '0'), &v)) {
          fail("literal too large");
        }
        ++pos_;
      }
      auto lit = std::make_shared<Node>();
      lit->value = v;
      return lit;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  size_t pos_ = 0;
};

long eval(const Node& node, long n, const std::string& text) {
  auto overflow = [&]() -> long { throw InputError("index expression \"" + text + "\" overflows"); };
  long r = 0;
  switch (node.op) {
    case 0: return node.value;
    case 'n': return n;
    case '~': {
      const long v = eval(*node.lhs, n, text);
      if (__builtin_sub_overflow(0L, v, &r)) return overflow();
      return r;
    }
    default: break;
  }
  const long a = eval(*node.lhs, n, text);
  const long b = eval(*node.rhs, n, text);
  switch (node.op) {
    case '+':
      if (__builtin_add_overflow(a, b, &r)) return overflow();
      return r;
    case '-':
      if (__builtin_sub_overflow(a, b, &r)) return overflow();
      return r;
    case '*':
      if (__builtin_mul_overflow(a, b, &r)) return overflow();
      return r;
    case '/':
      if (b == 0 || a % b != 0) {
        throw InputError("index expression \"" + text + "\": inexact division");
      }
      return a / b;
    case '^': {
      if (b < 0) throw InputError("index expression \"" + text + "\": negative exponent");
      r = 1;
      for (long i = 0; i < b; ++i) {
        if (__builtin_mul_overflow(r, a, &r)) return overflow();
      }
      return r;
    }
  }
  return overflow();
}

}  // namespace

IndexMap parse_index_expression(const std::string& text) {
  NodePtr root = Parser(text).parse();
  return [root, text](long n) { return eval(*root, n, text); };
}

}  // namespace lipfree
