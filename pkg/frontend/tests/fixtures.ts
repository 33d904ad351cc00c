import type { SessionView } from "../src/types.js";

/** A small corona session (path(2) ⊙ path(2)): bases 0,1; copies {2,3},{4,5}. */
export function sampleSession(overrides: Partial<SessionView> = {}): SessionView {
  return {
    id: "s1",
    graph: {
      expr: "corona(path(2),path(2))",
      n: 6,
      edges: [
        [0, 1],
        [0, 2],
        [0, 3],
        [2, 3],
        [1, 4],
        [1, 5],
        [4, 5],
      ],
      corona: [2, 2],
    },
    layout: [
      [0.3, 0.5],
      [0.7, 0.5],
      [0.2, 0.3],
      [0.2, 0.7],
      [0.8, 0.3],
      [0.8, 0.7],
    ],
    humanRole: "resolver",
    firstPlayer: "resolver",
    engine: "optimal",
    status: "ongoing",
    winner: null,
    toMove: "resolver",
    resolver: [],
    spoiler: [],
    transcript: [],
    meters: { unresolvedPairs: 15, spoilerAlive: true },
    ...overrides,
  };
}
