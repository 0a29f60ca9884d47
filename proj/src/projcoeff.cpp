#include "kla2/projcoeff.hpp"

#include <stdexcept>

namespace kla2 {

Rat operator/(const Rat& a, const Rat& b) {
  if (b.q_ == 0) throw std::domain_error("Rat: division by zero");
  return Rat(mpq_class(a.q_ / b.q_));
}

Rat wall_c(long n) {
  if (n < 1) throw std::invalid_argument("wall_c: index must be >= 1");
  if (n <= 4) return Rat();
  long k = (n - 1) / 2;
  return Rat(-(k - 1), k);
}

Rat wall_c_rec(long n) {
  if (n < 1) throw std::invalid_argument("wall_c_rec: index must be >= 1");
  // two interleaved chains; c_{j} depends on c_{j-2}
  Rat c;  // c_1..c_4 = 0
  for (long j = (n % 2 == 0) ? 4 : 3; j < n; j += 2)
    c = -(Rat::integer(1) / (Rat::integer(2) + c));
  return n <= 4 ? Rat() : c;
}

Rat wall_d(long n) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("wall_d: odd index >= 1 required");
  if (n <= 5) return Rat();
  long k = (n - 1) / 2;
  return Rat(k - 2, k - 1);
}

Rat wall_d_rec(long n) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("wall_d_rec: odd index >= 1 required");
  Rat d;  // d_1 = d_3 = d_5 = 0
  for (long j = 5; j < n; j += 2)
    d = Rat::integer(1) / (Rat::integer(2) - d);
  return n <= 5 ? Rat() : d;
}

Rat beyond_c(long m) {
  if (m < 1) throw std::invalid_argument("beyond_c: index must be >= 1");
  return Rat(m - 1, m);
}

Rat beyond_d(long m, long n) {
  if (m < 1 || n < 0) throw std::invalid_argument("beyond_d: requires m >= 1, n >= 0");
  return Rat(-n * (m + n), (n + 1) * (m + n + 1));
}

VerifyReport wall_rec_check(long N) {
  const std::string suite = "coeff-recursions";
  const std::string par = "wall," + std::to_string(N);
  Rat c_odd, c_even, d;  // running recursion values
  Rat prev_c = Rat::integer(0);
  for (long n = 1; n <= N; ++n) {
    Rat rec;
    if (n <= 4) {
      rec = Rat();
    } else if (n % 2 == 1) {
      c_odd = -(Rat::integer(1) / (Rat::integer(2) + c_odd));
      rec = c_odd;
    } else {
      c_even = -(Rat::integer(1) / (Rat::integer(2) + c_even));
      rec = c_even;
    }
    Rat closed = wall_c(n);
    if (closed != rec)
      return VerifyReport::fail(suite, par,
                                "c_" + std::to_string(n) + ": closed " + closed.to_string() +
                                    " != recursive " + rec.to_string());
    if (!(Rat::integer(-1) < closed && closed <= Rat::integer(0)))
      return VerifyReport::fail(suite, par, "c_" + std::to_string(n) + " outside (-1,0]");
    if (n >= 3 && !(closed <= prev_c))
      return VerifyReport::fail(suite, par, "c not nonincreasing at " + std::to_string(n));
    if (n >= 2) prev_c = closed;
  }
  Rat prev_d = Rat::integer(0);
  for (long n = 1; n <= N; n += 2) {
    Rat rec;
    if (n <= 5) {
      rec = Rat();
    } else {
      d = Rat::integer(1) / (Rat::integer(2) - d);
      rec = d;
    }
    Rat closed = wall_d(n);
    if (closed != rec)
      return VerifyReport::fail(suite, par,
                                "d_" + std::to_string(n) + ": closed " + closed.to_string() +
                                    " != recursive " + rec.to_string());
    if (!(prev_d <= closed))
      return VerifyReport::fail(suite, par, "d not nondecreasing at " + std::to_string(n));
    prev_d = closed;
  }
  return VerifyReport::ok(suite, par);
}

VerifyReport beyond_rec_check(long M, long N) {
  const std::string suite = "coeff-recursions";
  const std::string par = "beyond," + std::to_string(M) + "," + std::to_string(N);
  const Rat one = Rat::integer(1);
  Rat prev = Rat::integer(0);
  for (long m = 1; m < M; ++m) {
    if (-(one / beyond_c(m + 1)) != Rat::integer(-2) + beyond_c(m))
      return VerifyReport::fail(suite, par, "c recursion fails at m=" + std::to_string(m));
    Rat c = beyond_c(m);
    if (!(Rat::integer(0) <= c && c < one && prev <= c))
      return VerifyReport::fail(suite, par, "c bounds fail at m=" + std::to_string(m));
    prev = c;
  }
  const Rat minus_one = Rat::integer(-1);
  for (long n = 1; n <= N; ++n) {
    Rat cn = beyond_c(n);
    if (-(one / beyond_d(1, n)) != Rat::integer(3) - Rat::integer(2) * cn)
      return VerifyReport::fail(suite, par, "d_{1,n} recursion fails at n=" + std::to_string(n));
    Rat factor = (Rat::integer(2) - cn) * (Rat::integer(2) - cn);
    Rat base = Rat::integer(4) - Rat::integer(2) * cn;
    Rat d = beyond_d(1, n);
    for (long m = 1; m < M; ++m) {
      Rat next = beyond_d(m + 1, n);
      // -1/next == base + d*factor, cross-multiplied (next is never zero here)
      if ((base + d * factor) * next != minus_one)
        return VerifyReport::fail(suite, par,
                                  "d recursion fails at m=" + std::to_string(m) +
                                      ", n=" + std::to_string(n));
      d = next;
    }
  }
  return VerifyReport::ok(suite, par);
}

std::vector<CoeffRow> wall_coeff_table(long max_n) {
  std::vector<CoeffRow> rows;
  for (long n = 1; n <= max_n; ++n) {
    Rat a = wall_c(n), b = wall_c_rec(n);
    rows.push_back({"c[" + std::to_string(n) + "]", a, b, a == b});
    if (n % 2 == 1) {
      Rat dc = wall_d(n), dr = wall_d_rec(n);
      rows.push_back({"d[" + std::to_string(n) + "]", dc, dr, dc == dr});
    }
  }
  return rows;
}

std::vector<CoeffRow> beyond_coeff_table(long max_m, long max_n) {
  std::vector<CoeffRow> rows;
  for (long m = 1; m <= max_m; ++m) {
    Rat closed = beyond_c(m);
    Rat rec = (m == 1) ? Rat() : Rat::integer(1) / (Rat::integer(2) - beyond_c(m - 1));
    rows.push_back({"c[" + std::to_string(m) + "]", closed, rec, closed == rec});
  }
  for (long m = 1; m <= max_m; ++m)
    for (long n = 0; n <= max_n; ++n) {
      Rat closed = beyond_d(m, n);
      Rat rec;
      if (n == 0) {
        rec = Rat();
      } else if (m == 1) {
        rec = -(Rat::integer(1) / (Rat::integer(3) - Rat::integer(2) * beyond_c(n)));
      } else {
        Rat cn = beyond_c(n);
        rec = -(Rat::integer(1) /
                (Rat::integer(4) - Rat::integer(2) * cn +
                 beyond_d(m - 1, n) * (Rat::integer(2) - cn) * (Rat::integer(2) - cn)));
      }
      rows.push_back({"d[" + std::to_string(m) + "," + std::to_string(n) + "]", closed, rec,
                      closed == rec});
    }
  return rows;
}

}  // namespace kla2
