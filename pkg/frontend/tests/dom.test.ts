// DOM behavior against a stubbed API: rendering, selection, badges, the
// editor's four fixed slots and client-side pipe rejection.

import { beforeEach, describe, expect, it } from "vitest";

import type { SessionApi, TurnPayload } from "../src/api";
import { App } from "../src/app";

function payload(turn: number, overrides: Partial<TurnPayload> = {}): TurnPayload {
  return {
    turn,
    question: `question ${turn}?`,
    answer: `answer ${turn}`,
    normalized: null,
    sr: "_ | GoT | something | _",
    cfg: {
      nodes: [
        { id: "q0", turn: 0, role: "question", text: "question 0?" },
        { id: "a0", turn: 0, role: "answer", text: "answer 0" },
        ...(turn > 0 ? [{ id: `q${turn}`, turn, role: "question" as const, text: "x" }] : []),
      ],
      edges: turn > 0 ? [{ source: `q${turn}`, target: "q0", words: ["got"] }] : [],
      self_sufficient: turn === 0,
    },
    evidences: [
      { rank: 1, score: 2.5, source: "KB", text: "kb evidence", id: "kb:1", provenance: [] },
      { rank: 2, score: 1.5, source: "INFO", text: "info evidence", id: "info:1", provenance: [] },
    ],
    total_evidences: 2,
    ...overrides,
  };
}

class StubApi {
  asked: string[] = [];
  reasked: Array<{ turn: number; sr: string }> = [];
  nextTurn = 0;

  async createSession() {
    return "stub-session";
  }

  async ask(_session: string, question: string): Promise<TurnPayload> {
    this.asked.push(question);
    return payload(this.nextTurn++, { question });
  }

  async reaskTurn(_session: string, turn: number, sr: string): Promise<TurnPayload> {
    this.reasked.push({ turn, sr });
    return payload(turn, { sr, answer: "steered answer" });
  }

  async getSession() {
    return { session_id: "stub-session", turns: [] };
  }

  async deleteSession() {}
}

describe("app dom", () => {
  let app: App;
  let api: StubApi;

  beforeEach(async () => {
    document.body.innerHTML = '<main id="app"></main>';
    api = new StubApi();
    app = new App(api as unknown as SessionApi, document.getElementById("app")!);
    await app.start();
  });

  it("renders transcript cards with answers", async () => {
    await app.ask("question 0?");
    await app.ask("question 1?");
    const cards = document.querySelectorAll(".qa-card");
    expect(cards).toHaveLength(2);
    expect(cards[0].textContent).toContain("answer 0");
    expect(cards[0].querySelector(".self-sufficient")).not.toBeNull();
    expect(cards[1].querySelector(".self-sufficient")).toBeNull();
  });

  it("shows the frame editor with exactly four color-coded slots", async () => {
    await app.ask("question 0?");
    const inputs = document.querySelectorAll("#sr-editor input");
    expect(inputs).toHaveLength(4);
    expect(document.querySelector(".slot-context")).not.toBeNull();
    expect(document.querySelector(".slot-question")).not.toBeNull();
    expect(document.querySelector(".slot-predicate")).not.toBeNull();
    expect(document.querySelector(".slot-type")).not.toBeNull();
  });

  it("renders evidence badges and filter", async () => {
    await app.ask("question 0?");
    const badges = [...document.querySelectorAll("#evidence-panel .badge")].map(
      (b) => b.textContent,
    );
    expect(badges).toEqual(["KB", "INFO"]);
    app.filter("KB");
    const filtered = [...document.querySelectorAll("#evidence-panel .badge")].map(
      (b) => b.textContent,
    );
    expect(filtered).toEqual(["KB"]);
  });

  it("draws a flow edge for the follow-up", async () => {
    await app.ask("question 0?");
    await app.ask("question 1?");
    app.select(1);
    const edges = document.querySelectorAll("#cfg .cfg-edge");
    expect(edges).toHaveLength(1);
  });

  it("rejects pipe characters client-side without calling the server", async () => {
    await app.ask("question 0?");
    app.updateEditor({ question: "bad | value" });
    await app.reask();
    expect(api.reasked).toHaveLength(0);
    const banner = document.getElementById("error")!;
    expect(banner.hidden).toBe(false);
    expect(banner.textContent).toContain("may not contain");
  });

  it("steering replaces the turn and shows the answer diff", async () => {
    await app.ask("question 0?");
    app.updateEditor({ question: "Tyrion Lannister" });
    await app.reask();
    expect(api.reasked).toEqual([
      { turn: 0, sr: "_ | Tyrion Lannister | something | _" },
    ]);
    expect(document.querySelectorAll(".qa-card")).toHaveLength(1);
    expect(document.querySelector(".qa-answer")!.textContent).toContain("steered answer");
    const diff = document.getElementById("answer-diff")!;
    expect(diff.hidden).toBe(false);
    expect(diff.textContent).toContain("steered answer");
  });
});
