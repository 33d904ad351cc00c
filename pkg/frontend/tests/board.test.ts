import { describe, expect, it, vi } from "vitest";

import { project, renderBoard } from "../src/board.js";
import { sampleSession } from "./fixtures.js";

describe("project", () => {
  it("maps claims, coordinates, and base/copy styling", () => {
    const view = project(
      sampleSession({ resolver: [2], spoiler: [4], toMove: "resolver" }),
      null,
    );
    expect(view.vertices).toHaveLength(6);
    expect(view.vertices[2].claim).toBe("resolver");
    expect(view.vertices[4].claim).toBe("spoiler");
    expect(view.vertices[0].claim).toBe("unclaimed");
    expect(view.vertices[0].kind).toBe("base");
    expect(view.vertices[1].kind).toBe("base");
    expect(view.vertices[3].kind).toBe("copy");
    expect(view.vertices[5].x).toBeCloseTo(0.8);
  });

  it("treats every vertex as base when the graph is not a corona", () => {
    const s = sampleSession();
    s.graph.corona = null;
    expect(project(s, null).vertices.every((v) => v.kind === "base")).toBe(true);
  });

  it("flags the hinted vertex and exposes the rationale tag", () => {
    const view = project(sampleSession(), { vertex: 3, tag: "block transversal" });
    expect(view.vertices[3].hinted).toBe(true);
    expect(view.vertices.filter((v) => v.hinted)).toHaveLength(1);
    expect(view.hintTag).toBe("block transversal");
  });

  it("computes turn and banner from the session only", () => {
    const live = project(sampleSession({ toMove: "spoiler" }), null);
    expect(live.humanTurn).toBe(false);
    expect(live.banner).toBeNull();

    const done = project(
      sampleSession({ status: "finished", winner: "spoiler", toMove: null }),
      null,
    );
    expect(done.banner).toBe("Spoiler wins");
    expect(done.humanTurn).toBe(false);
  });

  it("renders the move log verbatim from the transcript", () => {
    const view = project(
      sampleSession({ transcript: [["resolver", 2], ["spoiler", 4]] }),
      null,
    );
    expect(view.moveLog).toEqual(["1. resolver → v2", "2. spoiler → v4"]);
  });

  it("passes the meters through untouched", () => {
    const view = project(
      sampleSession({ meters: { unresolvedPairs: 3, spoilerAlive: false } }),
      null,
    );
    expect(view.meters).toEqual({ unresolvedPairs: 3, spoilerAlive: false });
  });
});

describe("renderBoard", () => {
  it("draws one group per vertex and one line per edge", () => {
    const view = project(sampleSession({ resolver: [2] }), null);
    const svg = renderBoard(document, view, () => {});
    expect(svg.querySelectorAll("line.edge")).toHaveLength(7);
    expect(svg.querySelectorAll("g.vertex")).toHaveLength(6);
    expect(svg.querySelector('g[data-vertex="2"]')!.classList.contains("resolver"))
      .toBe(true);
    expect(svg.querySelector('g[data-vertex="0"]')!.classList.contains("base"))
      .toBe(true);
  });

  it("dispatches vertex clicks with the vertex id", () => {
    const onClick = vi.fn();
    const svg = renderBoard(document, project(sampleSession(), null), onClick);
    (svg.querySelector('g[data-vertex="5"]') as SVGGElement).dispatchEvent(
      new MouseEvent("click"),
    );
    expect(onClick).toHaveBeenCalledWith(5);
  });

  it("marks the hinted vertex", () => {
    const view = project(sampleSession(), { vertex: 1, tag: "optimal (solver)" });
    const svg = renderBoard(document, view, () => {});
    expect(svg.querySelectorAll("g.hinted")).toHaveLength(1);
    expect(svg.querySelector("g.hinted")!.getAttribute("data-vertex")).toBe("1");
  });
});
