#include "invol/generator.hpp"

#include <stdexcept>
#include <utility>

namespace invol {

Generator::Generator(Field field) : Generator(field, field.find_generator()) {}

Generator::Generator(Field field, Elem gamma) : field_(std::move(field)), gamma_(gamma) {
  if (!field_.is_generator(gamma_))
    throw std::domain_error("Generator: element does not generate the multiplicative group");

  if (field_.m()) {
    omega_ = field_.pow(gamma_, static_cast<std::int64_t>(*field_.m()));
    omega_sq_ = field_.mul(*omega_, *omega_);
  }

  const std::uint64_t group = field_.q() - 1;
  baby_count_ = 1;
  while (baby_count_ * baby_count_ < group) ++baby_count_;
  baby_table_.reserve(baby_count_);
  Elem y = field_.one();
  for (std::uint64_t j = 0; j < baby_count_; ++j) {
    baby_table_.emplace(y.v, j);
    y = field_.mul(y, gamma_);
  }
  giant_step_ = field_.inv(field_.pow(gamma_, static_cast<std::int64_t>(baby_count_)));
}

std::uint64_t Generator::m() const {
  if (!field_.m()) throw std::domain_error("Generator: field order is not 1 mod 3");
  return *field_.m();
}

Elem Generator::omega() const {
  if (!omega_) throw std::domain_error("Generator: field order is not 1 mod 3");
  return *omega_;
}

std::uint64_t Generator::dlog(Elem x) const {
  if (x.v == 0) throw std::domain_error("Generator: discrete log of zero");
  Elem y = x;
  for (std::uint64_t i = 0; i <= baby_count_; ++i) {
    auto it = baby_table_.find(y.v);
    if (it != baby_table_.end()) {
      return (i * baby_count_ + it->second) % (field_.q() - 1);
    }
    y = field_.mul(y, giant_step_);
  }
  throw std::logic_error("Generator: discrete log not found");
}

unsigned Generator::coset_index(Elem x) const {
  if (x.v == 0) throw std::domain_error("Generator: coset of zero");
  if (!omega_) throw std::domain_error("Generator: field order is not 1 mod 3");
  const Elem t = field_.pow(x, static_cast<std::int64_t>(*field_.m()));
  if (t == field_.one()) return 0;
  if (t == *omega_) return 1;
  if (t == *omega_sq_) return 2;
  throw std::logic_error("Generator: x^m is not a cube root of unity");
}

}  // namespace invol
