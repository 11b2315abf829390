#include "ccert/freealg.hpp"

namespace ccert {

namespace {

IdentityResult compare(std::string name, const FreePoly& lhs, const FreePoly& rhs,
                       const std::vector<std::string>& zero_words = {}) {
  IdentityResult r;
  r.name = std::move(name);
  r.lhs_terms = lhs.term_count();
  r.rhs_terms = rhs.term_count();
  const FreePoly difference = reduce(lhs - rhs, zero_words);
  r.passed = difference.is_zero();
  if (!r.passed) r.note = "difference " + difference.to_string();
  return r;
}

}  // namespace

std::vector<IdentityResult> identity_suite() {
  const FreePoly x = FreePoly::generator('x');
  const FreePoly y = FreePoly::generator('y');
  const FreePoly a = FreePoly::generator('a');
  const FreePoly b = FreePoly::generator('b');
  const FreePoly u = FreePoly::generator('u');
  const FreePoly s = FreePoly::generator('s');
  const FreePoly t = FreePoly::generator('t');
  std::vector<IdentityResult> out;

  // [[x,y],a] = [x,[y,a]] + [y,[a,x]]
  out.push_back(compare("jacobi", bracket(bracket(x, y), a),
                        bracket(x, bracket(y, a)) + bracket(y, bracket(a, x))));

  // [x,y]^2 = x(yxy - yyx) - y(xxy - xyx)
  out.push_back(compare("commutator-square", power(bracket(x, y), 2),
                        x * (y * x * y - y * y * x) - y * (x * x * y - x * y * x)));

  // (s+t)^3 with s, t commuting and squaring to zero
  {
    const FreePoly cube = abelianize(power(s + t, 3));
    const FreePoly binomial = power(s, 3) + 3 * (s * s * t) + 3 * (s * t * t) + power(t, 3);
    IdentityResult r = compare("commuting-cube", cube, abelianize(binomial));
    const FreePoly vanishing = reduce(cube, {"ss", "tt"});
    r.passed = r.passed && vanishing.is_zero();
    r.note = "noncommutative residue mod ss, tt: " + reduce(power(s + t, 3), {"ss", "tt"}).to_string();
    out.push_back(r);
  }

  // (ua - au)^3 ua = (ua)^4 modulo uu = 0
  out.push_back(compare("ua-fourth-power", power(u * a - a * u, 3) * (u * a), power(u * a, 4),
                        {"uu"}));

  // a[x,y]b = a[[x,y],b] + ab[x,y] = a[[b,y],x] + a[[x,b],y] + ab[x,y]
  out.push_back(compare("scaled-bracket-shift", a * bracket(x, y) * b,
                        a * bracket(bracket(x, y), b) + a * b * bracket(x, y)));
  out.push_back(compare("scaled-bracket-expansion", a * bracket(x, y) * b,
                        a * bracket(bracket(b, y), x) + a * bracket(bracket(x, b), y) +
                            a * b * bracket(x, y)));

  // a[x,y] = [ax,y] + [y,a]x
  out.push_back(compare("left-scalar-split", a * bracket(x, y),
                        bracket(a * x, y) + bracket(y, a) * x));

  // [a,xy] = [a,x]y + x[a,y]
  out.push_back(compare("product-rule", bracket(a, x * y),
                        bracket(a, x) * y + x * bracket(a, y)));

  // c[p, qr] = [cp, q]r + q[cp, r] + [qr, c]p
  {
    const FreePoly c = FreePoly::generator('c');
    const FreePoly p = FreePoly::generator('p');
    const FreePoly q = FreePoly::generator('q');
    const FreePoly r = FreePoly::generator('r');
    out.push_back(compare("three-pair-products", c * bracket(p, q * r),
                          bracket(c * p, q) * r + q * bracket(c * p, r) + bracket(q * r, c) * p));
  }
  return out;
}

}  // namespace ccert
