/** Pure projection from the API session view to a renderable board model.
 *
 * All game knowledge lives on the server; this module only reshapes the last
 * API response for drawing.  No outcome, turn, or legality is computed here.
 */

import type { Hint, SessionView } from "./types.js";

export type ClaimState = "unclaimed" | "resolver" | "spoiler";

export interface VertexView {
  id: number;
  x: number;
  y: number;
  claim: ClaimState;
  kind: "base" | "copy";
  hinted: boolean;
}

export interface BoardView {
  vertices: VertexView[];
  edges: [number, number][];
  meters: { unresolvedPairs: number; spoilerAlive: boolean };
  banner: string | null;
  toMove: string | null;
  humanTurn: boolean;
  hintTag: string | null;
  moveLog: string[];
}

export function project(session: SessionView, hint: Hint | null): BoardView {
  const resolver = new Set(session.resolver);
  const spoiler = new Set(session.spoiler);
  const baseCount = session.graph.corona ? session.graph.corona[0] : session.graph.n;
  const vertices: VertexView[] = session.layout.map(([x, y], id) => ({
    id,
    x,
    y,
    claim: resolver.has(id) ? "resolver" : spoiler.has(id) ? "spoiler" : "unclaimed",
    kind: id < baseCount ? "base" : "copy",
    hinted: hint !== null && hint.vertex === id,
  }));
  const banner =
    session.status === "finished"
      ? session.winner === "resolver"
        ? "Resolver wins"
        : "Spoiler wins"
      : null;
  return {
    vertices,
    edges: session.graph.edges,
    meters: session.meters,
    banner,
    toMove: session.toMove,
    humanTurn: session.status === "ongoing" && session.toMove === session.humanRole,
    hintTag: hint ? hint.tag : null,
    moveLog: session.transcript.map(
      ([player, vertex], i) => `${i + 1}. ${player} → v${vertex}`,
    ),
  };
}

/** Render the board model into an SVG element (vertices clickable). */
export function renderBoard(
  doc: Document,
  view: BoardView,
  onVertexClick: (id: number) => void,
): SVGSVGElement {
  const NS = "http://www.w3.org/2000/svg";
  const svg = doc.createElementNS(NS, "svg") as SVGSVGElement;
  svg.setAttribute("viewBox", "0 0 100 100");
  svg.classList.add("board");
  const pos = view.vertices.map((v) => [v.x * 100, v.y * 100] as const);
  for (const [u, w] of view.edges) {
    const line = doc.createElementNS(NS, "line");
    line.setAttribute("x1", String(pos[u][0]));
    line.setAttribute("y1", String(pos[u][1]));
    line.setAttribute("x2", String(pos[w][0]));
    line.setAttribute("y2", String(pos[w][1]));
    line.classList.add("edge");
    svg.appendChild(line);
  }
  for (const v of view.vertices) {
    const g = doc.createElementNS(NS, "g");
    g.classList.add("vertex", v.claim, v.kind);
    if (v.hinted) g.classList.add("hinted");
    g.setAttribute("data-vertex", String(v.id));
    const circle = doc.createElementNS(NS, "circle");
    circle.setAttribute("cx", String(pos[v.id][0]));
    circle.setAttribute("cy", String(pos[v.id][1]));
    circle.setAttribute("r", v.kind === "base" ? "3.2" : "2.4");
    g.appendChild(circle);
    const label = doc.createElementNS(NS, "text");
    label.setAttribute("x", String(pos[v.id][0]));
    label.setAttribute("y", String(pos[v.id][1] + 0.9));
    label.setAttribute("text-anchor", "middle");
    label.textContent = String(v.id);
    g.appendChild(label);
    g.addEventListener("click", () => onVertexClick(v.id));
    svg.appendChild(g);
  }
  return svg;
}
