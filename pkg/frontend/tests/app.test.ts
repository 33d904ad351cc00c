import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient, type FetchLike } from "../src/api.js";
import { App } from "../src/app.js";
import type { SessionView } from "../src/types.js";
import { sampleSession } from "./fixtures.js";

/** Routes requests to canned handlers so the app never needs a live server. */
function scriptedFetch(
  handlers: Record<string, () => { status: number; payload: unknown }>,
): FetchLike {
  return async (input, init) => {
    const key = `${init?.method ?? "GET"} ${input}`;
    const handler = handlers[key];
    if (!handler) throw new Error(`unexpected request ${key}`);
    const { status, payload } = handler();
    return new Response(JSON.stringify(payload), {
      status,
      headers: { "Content-Type": "application/json" },
    });
  };
}

function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}

describe("App", () => {
  let root: HTMLElement;

  beforeEach(() => {
    document.body.innerHTML = '<div id="app"></div>';
    root = document.getElementById("app")!;
  });

  function mountWith(
    handlers: Record<string, () => { status: number; payload: unknown }>,
  ): App {
    const app = new App(new ApiClient("", scriptedFetch(handlers)), root);
    app.mount();
    return app;
  }

  const strategiesOk = () => ({
    status: 200,
    payload: [{ name: "copywise-h", role: "resolver" }],
  });

  it("renders the board, meters, and turn from the created session", async () => {
    const app = mountWith({
      "GET /strategies?graph=corona(path(2)%2Ccycle(4))": strategiesOk,
      "POST /sessions": () => ({ status: 201, payload: sampleSession() }),
    });
    await flush();
    root.querySelector("form")!.dispatchEvent(new Event("submit"));
    await flush();

    expect(app.session?.id).toBe("s1");
    expect(root.querySelectorAll("g.vertex")).toHaveLength(6);
    expect(root.querySelector("#turn")!.textContent).toBe(
      "resolver to move (you)",
    );
    expect(root.querySelector("#meter-pairs")!.textContent).toBe(
      "unresolved pairs: 15",
    );
    expect(root.querySelector("#meter-alive")!.textContent).toBe(
      "resolving still possible",
    );
    const engine = root.querySelector<HTMLSelectElement>("#engine")!;
    expect([...engine.options].map((o) => o.value)).toEqual([
      "optimal",
      "strategy(copywise-h)",
    ]);
  });

  it("re-renders entirely from the move response after a vertex click", async () => {
    const afterMove = sampleSession({
      resolver: [0],
      spoiler: [2],
      toMove: "resolver",
      transcript: [["resolver", 0], ["spoiler", 2]],
      meters: { unresolvedPairs: 4, spoilerAlive: true },
    });
    const app = mountWith({
      "GET /strategies?graph=corona(path(2)%2Ccycle(4))": strategiesOk,
      "POST /sessions": () => ({ status: 201, payload: sampleSession() }),
      "POST /sessions/s1/moves": () => ({ status: 200, payload: afterMove }),
    });
    await flush();
    root.querySelector("form")!.dispatchEvent(new Event("submit"));
    await flush();
    root
      .querySelector('g[data-vertex="0"]')!
      .dispatchEvent(new MouseEvent("click"));
    await flush();

    expect(app.session).toEqual(afterMove);
    expect(
      root.querySelector('g[data-vertex="0"]')!.classList.contains("resolver"),
    ).toBe(true);
    expect(
      root.querySelector('g[data-vertex="2"]')!.classList.contains("spoiler"),
    ).toBe(true);
    const log = [...root.querySelectorAll("#move-log li")].map(
      (li) => li.textContent,
    );
    expect(log).toEqual(["1. resolver → v0", "2. spoiler → v2"]);
    expect(root.querySelector("#meter-pairs")!.textContent).toBe(
      "unresolved pairs: 4",
    );
  });

  it("shows a rejected move as a toast and leaves the board unchanged", async () => {
    const initial = sampleSession({ resolver: [0], transcript: [["resolver", 0]] });
    const app = mountWith({
      "GET /strategies?graph=corona(path(2)%2Ccycle(4))": strategiesOk,
      "POST /sessions": () => ({ status: 201, payload: initial }),
      "POST /sessions/s1/moves": () => ({
        status: 409,
        payload: { code: "vertex_claimed", message: "vertex 0 is taken" },
      }),
    });
    await flush();
    root.querySelector("form")!.dispatchEvent(new Event("submit"));
    await flush();
    root
      .querySelector('g[data-vertex="0"]')!
      .dispatchEvent(new MouseEvent("click"));
    await flush();

    expect(app.session).toEqual(initial);
    const toast = root.querySelector("#toast")!;
    expect(toast.textContent).toBe("vertex 0 is taken");
    expect(toast.classList.contains("shake")).toBe(true);
    expect(
      root.querySelector('g[data-vertex="0"]')!.classList.contains("resolver"),
    ).toBe(true);
  });

  it("marks the hinted vertex and shows its rationale tag", async () => {
    mountWith({
      "GET /strategies?graph=corona(path(2)%2Ccycle(4))": strategiesOk,
      "POST /sessions": () => ({ status: 201, payload: sampleSession() }),
      "GET /sessions/s1/hint": () => ({
        status: 200,
        payload: { vertex: 3, tag: "block transversal" },
      }),
    });
    await flush();
    root.querySelector("form")!.dispatchEvent(new Event("submit"));
    await flush();
    root
      .querySelector<HTMLButtonElement>("#hint-btn")!
      .dispatchEvent(new MouseEvent("click"));
    await flush();

    expect(root.querySelector("g.hinted")!.getAttribute("data-vertex")).toBe("3");
    expect(root.querySelector("#hint-tag")!.textContent).toBe(
      "hint: block transversal",
    );
  });

  it("shows the winner banner and ignores further clicks once finished", async () => {
    let moves = 0;
    const finished: SessionView = sampleSession({
      status: "finished",
      winner: "spoiler",
      toMove: null,
      meters: { unresolvedPairs: 2, spoilerAlive: false },
    });
    mountWith({
      "GET /strategies?graph=corona(path(2)%2Ccycle(4))": strategiesOk,
      "POST /sessions": () => ({ status: 201, payload: finished }),
      "POST /sessions/s1/moves": () => {
        moves += 1;
        return { status: 409, payload: { code: "game_over", message: "over" } };
      },
    });
    await flush();
    root.querySelector("form")!.dispatchEvent(new Event("submit"));
    await flush();
    root
      .querySelector('g[data-vertex="1"]')!
      .dispatchEvent(new MouseEvent("click"));
    await flush();

    expect(root.querySelector("#banner")!.textContent).toBe("Spoiler wins");
    expect(root.querySelector("#meter-alive")!.textContent).toBe(
      "Spoiler has killed every resolving set",
    );
    expect(moves).toBe(0);
  });

  it("restores the previous position from the undo response", async () => {
    const before = sampleSession({
      resolver: [0],
      spoiler: [2],
      transcript: [["resolver", 0], ["spoiler", 2]],
    });
    const app = mountWith({
      "GET /strategies?graph=corona(path(2)%2Ccycle(4))": strategiesOk,
      "POST /sessions": () => ({ status: 201, payload: before }),
      "POST /sessions/s1/undo": () => ({ status: 200, payload: sampleSession() }),
    });
    await flush();
    root.querySelector("form")!.dispatchEvent(new Event("submit"));
    await flush();
    root
      .querySelector<HTMLButtonElement>("#undo-btn")!
      .dispatchEvent(new MouseEvent("click"));
    await flush();

    expect(app.session).toEqual(sampleSession());
    expect(root.querySelectorAll("g.resolver")).toHaveLength(0);
    expect(root.querySelectorAll("#move-log li")).toHaveLength(0);
  });

  it("surfaces a session-creation failure in the form error slot", async () => {
    const app = mountWith({
      "GET /strategies?graph=corona(path(2)%2Ccycle(4))": strategiesOk,
      "POST /sessions": () => ({
        status: 400,
        payload: { code: "parse_error", message: "unknown family 'blob'" },
      }),
    });
    await flush();
    root.querySelector("form")!.dispatchEvent(new Event("submit"));
    await flush();

    expect(app.session).toBeNull();
    expect(root.querySelector("#form-error")!.textContent).toBe(
      "unknown family 'blob'",
    );
    expect(root.querySelector("#board-holder")!.textContent).toBe(
      "start a game above",
    );
  });
});
