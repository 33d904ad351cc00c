/** Wires the new-game form, board, meters, hint overlay, and undo button.
 *
 * The UI is a pure projection of the last API response: every mutation round
 * trips through the server and re-renders from the returned session view
 * (optimistic updates are deliberately absent).
 */

import { ApiClient, ApiError } from "./api.js";
import { project, renderBoard } from "./board.js";
import type { Hint, PlayerName, SessionView } from "./types.js";

interface AppState {
  session: SessionView | null;
  hint: Hint | null;
  busy: boolean;
}

export class App {
  private state: AppState = { session: null, hint: null, busy: false };

  constructor(
    private readonly api: ApiClient,
    private readonly root: HTMLElement,
  ) {}

  mount(): void {
    this.root.innerHTML = `
      <form id="new-game">
        <input id="graph-expr" value="corona(path(2),cycle(4))" size="28">
        <select id="role">
          <option value="resolver">play Resolver</option>
          <option value="spoiler">play Spoiler</option>
        </select>
        <select id="first">
          <option value="resolver">Resolver first</option>
          <option value="spoiler">Spoiler first</option>
        </select>
        <select id="engine"><option value="optimal">optimal engine</option></select>
        <button type="submit">new game</button>
        <span id="form-error" class="error" role="alert"></span>
      </form>
      <div id="status-bar">
        <span id="turn"></span>
        <span id="meter-pairs" title="vertex pairs the Resolver set does not separate yet"></span>
        <span id="meter-alive" title="whether the Spoiler has already killed every resolving set"></span>
        <span id="hint-tag"></span>
      </div>
      <div id="banner" role="status"></div>
      <div id="board-holder"></div>
      <div id="controls">
        <button id="hint-btn" type="button">hint</button>
        <button id="undo-btn" type="button">undo</button>
      </div>
      <ol id="move-log"></ol>
      <div id="toast" role="alert"></div>
    `;
    this.q<HTMLFormElement>("#new-game").addEventListener("submit", (e) => {
      e.preventDefault();
      void this.newGame();
    });
    this.q<HTMLInputElement>("#graph-expr").addEventListener("change", () => {
      void this.refreshEngineChoices();
    });
    this.q<HTMLButtonElement>("#hint-btn").addEventListener("click", () => {
      void this.requestHint();
    });
    this.q<HTMLButtonElement>("#undo-btn").addEventListener("click", () => {
      void this.undo();
    });
    void this.refreshEngineChoices();
    this.render();
  }

  private q<T extends Element>(sel: string): T {
    const el = this.root.querySelector(sel);
    if (!el) throw new Error(`missing element ${sel}`);
    return el as T;
  }

  async refreshEngineChoices(): Promise<void> {
    const expr = this.q<HTMLInputElement>("#graph-expr").value;
    const select = this.q<HTMLSelectElement>("#engine");
    let options = `<option value="optimal">optimal engine</option>`;
    try {
      const infos = await this.api.strategies(expr);
      for (const s of infos) {
        options += `<option value="strategy(${s.name})">${s.name} (${s.role})</option>`;
      }
      this.q("#form-error").textContent = "";
    } catch (err) {
      if (err instanceof ApiError) {
        this.q("#form-error").textContent = err.message;
      }
    }
    select.innerHTML = options;
  }

  async newGame(): Promise<void> {
    const req = {
      graph: this.q<HTMLInputElement>("#graph-expr").value,
      humanRole: this.q<HTMLSelectElement>("#role").value as PlayerName,
      firstPlayer: this.q<HTMLSelectElement>("#first").value as PlayerName,
      engine: this.q<HTMLSelectElement>("#engine").value,
    };
    await this.call(async () => {
      this.state.session = await this.api.createSession(req);
      this.state.hint = null;
      this.q("#form-error").textContent = "";
    }, "#form-error");
  }

  async clickVertex(id: number): Promise<void> {
    const s = this.state.session;
    if (!s || s.status !== "ongoing" || this.state.busy) return;
    await this.call(async () => {
      this.state.session = await this.api.playMove(s.id, id);
      this.state.hint = null;
    });
  }

  async requestHint(): Promise<void> {
    const s = this.state.session;
    if (!s) return;
    await this.call(async () => {
      this.state.hint = await this.api.hint(s.id);
    });
  }

  async undo(): Promise<void> {
    const s = this.state.session;
    if (!s) return;
    await this.call(async () => {
      this.state.session = await this.api.undo(s.id);
      this.state.hint = null;
    });
  }

  /** Serialize API calls; surface errors as a toast without touching state. */
  private async call(
    action: () => Promise<void>,
    errorSel = "#toast",
  ): Promise<void> {
    if (this.state.busy) return;
    this.state.busy = true;
    try {
      await action();
    } catch (err) {
      if (err instanceof ApiError) {
        const slot = this.q(errorSel);
        slot.textContent = err.message;
        slot.classList.add("shake");
      } else {
        throw err;
      }
    } finally {
      this.state.busy = false;
      this.render();
    }
  }

  render(): void {
    const holder = this.q("#board-holder");
    const banner = this.q("#banner");
    const s = this.state.session;
    if (!s) {
      holder.textContent = "start a game above";
      banner.textContent = "";
      return;
    }
    const view = project(s, this.state.hint);
    holder.innerHTML = "";
    holder.appendChild(
      renderBoard(this.root.ownerDocument, view, (id) => {
        void this.clickVertex(id);
      }),
    );
    banner.textContent = view.banner ?? "";
    this.q("#turn").textContent = view.banner
      ? ""
      : `${view.toMove} to move${view.humanTurn ? " (you)" : ""}`;
    this.q("#meter-pairs").textContent =
      `unresolved pairs: ${view.meters.unresolvedPairs}`;
    this.q("#meter-alive").textContent = view.meters.spoilerAlive
      ? "resolving still possible"
      : "Spoiler has killed every resolving set";
    this.q("#hint-tag").textContent = view.hintTag
      ? `hint: ${view.hintTag}`
      : "";
    const log = this.q("#move-log");
    log.innerHTML = "";
    for (const entry of view.moveLog) {
      const li = this.root.ownerDocument.createElement("li");
      li.textContent = entry;
      log.appendChild(li);
    }
  }

  /** Test hook: the last rendered session view. */
  get session(): SessionView | null {
    return this.state.session;
  }
}

export function start(root: HTMLElement, baseUrl = ""): App {
  const app = new App(new ApiClient(baseUrl), root);
  app.mount();
  return app;
}
