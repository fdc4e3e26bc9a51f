/** Exact rationals over bigint, enough to mirror the service's numbers.
 *
 * Every number the service sends carries an exact string form ("17/20",
 * "-4.375", "6"); previews must compare those without float drift, so
 * thresholds and deck values are computed here exactly.
 */

export interface Rat {
  readonly n: bigint;
  readonly d: bigint;
}

function gcd(a: bigint, b: bigint): bigint {
  a = a < 0n ? -a : a;
  b = b < 0n ? -b : b;
  while (b) {
    [a, b] = [b, a % b];
  }
  return a;
}

export function rat(n: bigint | number, d: bigint | number = 1n): Rat {
  let nn = BigInt(n);
  let dd = BigInt(d);
  if (dd === 0n) throw new Error("zero denominator");
  if (dd < 0n) {
    nn = -nn;
    dd = -dd;
  }
  const g = gcd(nn, dd);
  return g ? { n: nn / g, d: dd / g } : { n: 0n, d: 1n };
}

const FRACTION = /^(-?\d+)\/(\d+)$/;
const DECIMAL = /^(-?)(\d+)(?:\.(\d+))?$/;

export function parseRat(s: string): Rat {
  const text = s.trim();
  let m = FRACTION.exec(text);
  if (m) return rat(BigInt(m[1]!), BigInt(m[2]!));
  m = DECIMAL.exec(text);
  if (m) {
    const sign = m[1] === "-" ? -1n : 1n;
    const whole = BigInt(m[2]!);
    const frac = m[3] ?? "";
    const scale = 10n ** BigInt(frac.length);
    return rat(sign * (whole * scale + BigInt(frac || "0")), scale);
  }
  throw new Error(`not a rational: ${JSON.stringify(s)}`);
}

export function ratStr(x: Rat): string {
  return x.d === 1n ? x.n.toString() : `${x.n}/${x.d}`;
}

export function ratFloat(x: Rat): number {
  return Number(x.n) / Number(x.d);
}

export function cmp(a: Rat, b: Rat): number {
  const left = a.n * b.d;
  const right = b.n * a.d;
  return left < right ? -1 : left > right ? 1 : 0;
}

export function add(a: Rat, b: Rat): Rat {
  return rat(a.n * b.d + b.n * a.d, a.d * b.d);
}

export function sub(a: Rat, b: Rat): Rat {
  return rat(a.n * b.d - b.n * a.d, a.d * b.d);
}

export const ONE: Rat = rat(1n);
export const ZERO: Rat = rat(0n);
