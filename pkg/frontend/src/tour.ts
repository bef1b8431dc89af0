/** Client-side tour math: interpolate between the bundle's precomputed
 * orthonormal bases and project data rows.  The bundle ships only key
 * frames; intermediate frames are re-orthonormalized here and checked
 * against a 1e-6 orthonormality budget at runtime. */

export const ORTHO_TOL = 1e-6;

export type Basis = number[][]; // p x 2, orthonormal columns

export function orthonormalityResidual(basis: Basis): number {
  let g00 = 0;
  let g01 = 0;
  let g11 = 0;
  for (const [a, b] of basis) {
    g00 += a * a;
    g01 += a * b;
    g11 += b * b;
  }
  return Math.max(Math.abs(g00 - 1), Math.abs(g01), Math.abs(g11 - 1));
}

export function assertOrthonormal(basis: Basis): Basis {
  const res = orthonormalityResidual(basis);
  if (!(res < ORTHO_TOL)) {
    throw new Error(`tour frame lost orthonormality (residual ${res})`);
  }
  return basis;
}

/** Gram-Schmidt on the two columns. */
export function reorthonormalize(basis: Basis): Basis {
  const p = basis.length;
  let n0 = 0;
  for (const row of basis) n0 += row[0] * row[0];
  n0 = Math.sqrt(n0);
  if (n0 === 0) throw new Error("degenerate tour frame (zero column)");
  const out: Basis = basis.map((row) => [row[0] / n0, row[1]]);
  let dot = 0;
  for (const row of out) dot += row[0] * row[1];
  let n1 = 0;
  for (let i = 0; i < p; i++) {
    out[i][1] -= dot * out[i][0];
    n1 += out[i][1] * out[i][1];
  }
  n1 = Math.sqrt(n1);
  if (n1 === 0) throw new Error("degenerate tour frame (parallel columns)");
  for (const row of out) row[1] /= n1;
  return out;
}

/** Linear blend of two key frames, re-orthonormalized; t in [0, 1]. */
export function interpolateBasis(a: Basis, b: Basis, t: number): Basis {
  const mixed = a.map((row, i) => [
    (1 - t) * row[0] + t * b[i][0],
    (1 - t) * row[1] + t * b[i][1],
  ]);
  return assertOrthonormal(reorthonormalize(mixed));
}

/** Frame for global tour position `pos` in [0, segments]; consecutive
 * bundle bases delimit unit-length segments. */
export function frameAt(bases: Basis[], pos: number): Basis {
  if (bases.length === 1) return assertOrthonormal(bases[0]);
  const segments = bases.length - 1;
  const wrapped = ((pos % segments) + segments) % segments;
  const seg = Math.min(Math.floor(wrapped), segments - 1);
  return interpolateBasis(bases[seg], bases[seg + 1], wrapped - seg);
}

export function project(rows: number[][], basis: Basis): [number, number][] {
  return rows.map((row) => {
    let x = 0;
    let y = 0;
    for (let i = 0; i < basis.length; i++) {
      x += row[i] * basis[i][0];
      y += row[i] * basis[i][1];
    }
    return [x, y];
  });
}
