#include "qpoch/big_index.hpp"

#include <cctype>
#include <utility>

#include "qpoch/errors.hpp"

namespace qpoch {

BigIndex::BigIndex(mpz_class v) : value_(std::move(v)) {
  if (sgn(value_) < 0) {
    throw UsageError("BigIndex must be non-negative, got " + value_.get_str(10));
  }
}

BigIndex BigIndex::from_decimal(std::string_view text) {
  if (text.empty()) {
    throw UsageError("empty index");
  }
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw UsageError("index must be a non-negative decimal numeral: '" + std::string(text) + "'");
    }
  }
  return BigIndex(mpz_class(std::string(text), 10));
}

BigIndex BigIndex::power_of_ten(unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return BigIndex(std::move(r));
}

BigIndex BigIndex::half() const {
  mpz_class r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), value_.get_mpz_t(), 1);
  return BigIndex(std::move(r));
}

}  // namespace qpoch
