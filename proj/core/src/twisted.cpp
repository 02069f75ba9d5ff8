#include "klrw/twisted.hpp"

#include <sstream>
#include <stdexcept>

namespace klrw {

namespace {

// Every term of `value` must run from chamber `src` to chamber `tgt`.
void check_endpoints(const AlgElem& value, int tgt, int src, const char* what) {
  for (const auto& [m, c] : value.terms()) {
    if (m.tgt != tgt || m.src != src) {
      throw std::invalid_argument(std::string(what) + ": entry endpoints do not match the slots");
    }
  }
}

}  // namespace

TwComplex::TwComplex(std::vector<Slot> slots) : slots_(std::move(slots)) {}

TwComplex TwComplex::single(int object) { return TwComplex({Slot{object, 0}}); }

const Slot& TwComplex::slot(int k) const {
  if (k < 0 || k >= size()) throw std::out_of_range("TwComplex::slot");
  return slots_[static_cast<std::size_t>(k)];
}

AlgElem TwComplex::delta(int to, int from) const {
  auto it = delta_.find({to, from});
  return it == delta_.end() ? AlgElem::zero() : it->second;
}

void TwComplex::set_delta(int to, int from, const AlgElem& value) {
  const Slot& t = slot(to);
  const Slot& f = slot(from);
  if (t.degree != f.degree + 1) {
    throw std::invalid_argument("TwComplex::set_delta: entry must raise the degree by one");
  }
  check_endpoints(value, t.object, f.object, "TwComplex::set_delta");
  if (value.is_zero()) {
    delta_.erase({to, from});
  } else {
    delta_[{to, from}] = value;
  }
}

bool TwComplex::delta_squares_to_zero() const {
  for (int to = 0; to < size(); ++to) {
    for (int from = 0; from < size(); ++from) {
      AlgElem acc;
      for (int mid = 0; mid < size(); ++mid) {
        acc += mu2(delta(to, mid), delta(mid, from));
      }
      if (!acc.is_zero()) return false;
    }
  }
  return true;
}

TwMorphism::TwMorphism(TwComplex source, TwComplex target, int degree)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree) {}

AlgElem TwMorphism::block(int to, int from) const {
  auto it = blocks_.find({to, from});
  return it == blocks_.end() ? AlgElem::zero() : it->second;
}

void TwMorphism::add_block(int to, int from, const AlgElem& value) {
  const Slot& t = target_.slot(to);
  const Slot& f = source_.slot(from);
  if (t.degree != f.degree + degree_) {
    throw std::invalid_argument("TwMorphism::add_block: slot degrees do not match the morphism degree");
  }
  check_endpoints(value, t.object, f.object, "TwMorphism::add_block");
  AlgElem& slot_value = blocks_[{to, from}];
  slot_value += value;
  if (slot_value.is_zero()) blocks_.erase({to, from});
}

TwMorphism& TwMorphism::operator+=(const TwMorphism& o) {
  if (source_ != o.source_ || target_ != o.target_ || degree_ != o.degree_) {
    throw std::invalid_argument("TwMorphism: shape mismatch in +=");
  }
  for (const auto& [key, value] : o.blocks_) {
    AlgElem& slot_value = blocks_[key];
    slot_value += value;
    if (slot_value.is_zero()) blocks_.erase(key);
  }
  return *this;
}

TwMorphism& TwMorphism::operator-=(const TwMorphism& o) {
  if (source_ != o.source_ || target_ != o.target_ || degree_ != o.degree_) {
    throw std::invalid_argument("TwMorphism: shape mismatch in -=");
  }
  for (const auto& [key, value] : o.blocks_) {
    AlgElem& slot_value = blocks_[key];
    slot_value -= value;
    if (slot_value.is_zero()) blocks_.erase(key);
  }
  return *this;
}

TwMorphism& TwMorphism::operator*=(const Rat& c) {
  if (c == 0) {
    blocks_.clear();
    return *this;
  }
  for (auto& [key, value] : blocks_) value *= c;
  return *this;
}

TwMorphism zero_morphism(const TwComplex& source, const TwComplex& target, int degree) {
  return TwMorphism(source, target, degree);
}

TwMorphism identity_morphism(const TwComplex& c) {
  TwMorphism id(c, c, 0);
  for (int k = 0; k < c.size(); ++k) {
    id.add_block(k, k, AlgElem(e(c.slot(k).object)));
  }
  return id;
}

TwMorphism compose(const TwMorphism& f2, const TwMorphism& f1) {
  if (f1.target() != f2.source()) {
    throw std::invalid_argument("compose: middle complexes do not match");
  }
  TwMorphism out(f1.source(), f2.target(), f2.degree() + f1.degree());
  for (const auto& [key2, value2] : f2.blocks()) {
    for (const auto& [key1, value1] : f1.blocks()) {
      if (key2.second != key1.first) continue;
      AlgElem prod = mu2(value2, value1);
      if (!prod.is_zero()) out.add_block(key2.first, key1.second, prod);
    }
  }
  return out;
}

TwMorphism mu_delta1(const TwMorphism& f) {
  const Rat sign = (f.degree() % 2 == 0) ? Rat(1) : Rat(-1);
  TwMorphism out(f.source(), f.target(), f.degree() + 1);
  for (const auto& [key, value] : f.blocks()) {
    // delta of the target after f
    for (const auto& [dkey, dvalue] : f.target().delta_entries()) {
      if (dkey.second != key.first) continue;
      AlgElem prod = sign * mu2(dvalue, value);
      if (!prod.is_zero()) out.add_block(dkey.first, key.second, prod);
    }
    // f after delta of the source
    for (const auto& [dkey, dvalue] : f.source().delta_entries()) {
      if (dkey.first != key.second) continue;
      AlgElem prod = Rat(-1) * mu2(value, dvalue);
      if (!prod.is_zero()) out.add_block(key.first, dkey.second, prod);
    }
  }
  return out;
}

TwMorphism mu_delta2(const TwMorphism& f2, const TwMorphism& f1) {
  TwMorphism out = compose(f2, f1);
  if (f1.degree() % 2 != 0) out *= Rat(-1);
  return out;
}

std::string to_string(const Slot& s) {
  std::ostringstream os;
  os << "T" << s.object << "[" << s.degree << "]";
  return os.str();
}

std::string to_string(const TwComplex& c) {
  std::ostringstream os;
  for (int k = 0; k < c.size(); ++k) {
    if (k > 0) os << " (+) ";
    os << to_string(c.slot(k));
  }
  if (!c.delta_entries().empty()) {
    os << " with delta {";
    bool first = true;
    for (const auto& [key, value] : c.delta_entries()) {
      if (!first) os << ", ";
      first = false;
      os << key.second << "->" << key.first << ": " << to_string(value);
    }
    os << "}";
  }
  return os.str();
}

std::string to_string(const TwMorphism& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, value] : f.blocks()) {
    if (!first) os << "; ";
    first = false;
    os << to_string(f.source().slot(key.second)) << " -> " << to_string(f.target().slot(key.first))
       << ": " << to_string(value);
  }
  return os.str();
}

}  // namespace klrw
