import { describe, expect, it } from "vitest";

import type { Cfg } from "../src/api";
import { COLUMN_WIDTH, forwardEdges, hasNoForwardEdges, layoutCfg } from "../src/cfg";

const runningExample: Cfg = {
  nodes: [
    { id: "q0", turn: 0, role: "question", text: "Who played Jaime Lannister in GoT?" },
    { id: "a0", turn: 0, role: "answer", text: "Nikolaj Coster-Waldau" },
    { id: "q1", turn: 1, role: "question", text: "What about the dwarf?" },
  ],
  edges: [{ source: "q1", target: "q0", words: ["got"] }],
  self_sufficient: false,
};

describe("flow-graph layout", () => {
  it("places turns as left-to-right columns", () => {
    const layout = layoutCfg(runningExample);
    const byId = new Map(layout.nodes.map((n) => [n.id, n]));
    expect(byId.get("q0")!.x).toBeLessThan(byId.get("q1")!.x);
    expect(byId.get("q1")!.x - byId.get("q0")!.x).toBe(COLUMN_WIDTH);
    expect(layout.columns).toBe(2);
  });

  it("separates question and answer rows", () => {
    const layout = layoutCfg(runningExample);
    const byId = new Map(layout.nodes.map((n) => [n.id, n]));
    expect(byId.get("q0")!.y).toBeLessThan(byId.get("a0")!.y);
  });

  it("keeps edge labels", () => {
    const layout = layoutCfg(runningExample);
    expect(layout.edges[0].words).toEqual(["got"]);
  });

  it("accepts backward edges", () => {
    expect(hasNoForwardEdges(layoutCfg(runningExample))).toBe(true);
  });

  it("flags forward edges", () => {
    const broken: Cfg = {
      ...runningExample,
      edges: [{ source: "q0", target: "q1", words: ["oops"] }],
    };
    const layout = layoutCfg(broken);
    expect(hasNoForwardEdges(layout)).toBe(false);
    expect(forwardEdges(layout)).toHaveLength(1);
  });

  it("marks self-sufficient graphs", () => {
    const solo: Cfg = {
      nodes: [{ id: "q0", turn: 0, role: "question", text: "first" }],
      edges: [],
      self_sufficient: true,
    };
    expect(layoutCfg(solo).selfSufficient).toBe(true);
  });
});
