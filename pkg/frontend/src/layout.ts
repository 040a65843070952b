// Deterministic force-directed layout. Positions are seeded from a hash of
// the node names, so the same graph always lands in the same arrangement and
// screenshots are reproducible.

export interface Point {
  x: number;
  y: number;
}

function hashString(text: string): number {
  let h = 2166136261;
  for (let i = 0; i < text.length; i++) {
    h ^= text.charCodeAt(i);
    h = Math.imul(h, 16777619);
  }
  return h >>> 0;
}

function mulberry32(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state + 0x6d2b79f5) >>> 0;
    let t = state;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function computeLayout(
  nodes: string[],
  arcs: [string, string][],
  width: number,
  height: number,
): Map<string, Point> {
  const ordered = [...nodes].sort();
  const positions = new Map<string, Point>();
  if (ordered.length === 0) {
    return positions;
  }
  const random = mulberry32(hashString(ordered.join("|")));
  for (const name of ordered) {
    positions.set(name, {
      x: width * (0.15 + 0.7 * random()),
      y: height * (0.15 + 0.7 * random()),
    });
  }
  const index = new Map(ordered.map((name, i) => [name, i]));
  const links = arcs
    .filter(([s, t]) => s !== t && index.has(s) && index.has(t))
    .map(([s, t]) => [s, t] as const);

  const area = width * height;
  const ideal = Math.sqrt(area / ordered.length) * 0.7;
  for (let iteration = 0; iteration < 150; iteration++) {
    const cooling = 0.1 * Math.min(width, height) * (1 - iteration / 150);
    const force = new Map<string, Point>(ordered.map((n) => [n, { x: 0, y: 0 }]));
    for (let i = 0; i < ordered.length; i++) {
      for (let j = i + 1; j < ordered.length; j++) {
        const a = positions.get(ordered[i])!;
        const b = positions.get(ordered[j])!;
        let dx = a.x - b.x;
        let dy = a.y - b.y;
        const distance = Math.max(Math.hypot(dx, dy), 0.01);
        const repulsion = (ideal * ideal) / distance;
        dx /= distance;
        dy /= distance;
        const fa = force.get(ordered[i])!;
        const fb = force.get(ordered[j])!;
        fa.x += dx * repulsion;
        fa.y += dy * repulsion;
        fb.x -= dx * repulsion;
        fb.y -= dy * repulsion;
      }
    }
    for (const [s, t] of links) {
      const a = positions.get(s)!;
      const b = positions.get(t)!;
      let dx = a.x - b.x;
      let dy = a.y - b.y;
      const distance = Math.max(Math.hypot(dx, dy), 0.01);
      const attraction = (distance * distance) / ideal;
      dx /= distance;
      dy /= distance;
      const fa = force.get(s)!;
      const fb = force.get(t)!;
      fa.x -= dx * attraction;
      fa.y -= dy * attraction;
      fb.x += dx * attraction;
      fb.y += dy * attraction;
    }
    for (const name of ordered) {
      const p = positions.get(name)!;
      const f = force.get(name)!;
      const magnitude = Math.max(Math.hypot(f.x, f.y), 0.01);
      const step = Math.min(magnitude, cooling);
      p.x += (f.x / magnitude) * step;
      p.y += (f.y / magnitude) * step;
      p.x = Math.min(width - 30, Math.max(30, p.x));
      p.y = Math.min(height - 30, Math.max(30, p.y));
    }
  }
  return positions;
}
