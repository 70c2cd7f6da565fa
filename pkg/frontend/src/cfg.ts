// Conversational-flow-graph layout: a left-to-right DAG with one column per
// turn, questions on the top row and answers below.

import type { Cfg } from "./api";

export interface NodePosition {
  id: string;
  turn: number;
  role: "question" | "answer";
  x: number;
  y: number;
  label: string;
}

export interface EdgePosition {
  from: NodePosition;
  to: NodePosition;
  words: string[];
}

export interface CfgLayout {
  nodes: NodePosition[];
  edges: EdgePosition[];
  columns: number;
  selfSufficient: boolean;
}

export const COLUMN_WIDTH = 150;
export const ROW_HEIGHT = 60;

export function layoutCfg(cfg: Cfg): CfgLayout {
  const nodes: NodePosition[] = cfg.nodes.map((node) => ({
    id: node.id,
    turn: node.turn,
    role: node.role,
    x: node.turn * COLUMN_WIDTH + COLUMN_WIDTH / 2,
    y: (node.role === "question" ? 0 : 1) * ROW_HEIGHT + ROW_HEIGHT / 2,
    label: node.text,
  }));
  const byId = new Map(nodes.map((n) => [n.id, n]));
  const edges: EdgePosition[] = [];
  for (const edge of cfg.edges) {
    const from = byId.get(edge.source);
    const to = byId.get(edge.target);
    if (from && to) {
      edges.push({ from, to, words: edge.words });
    }
  }
  const columns = nodes.length ? Math.max(...nodes.map((n) => n.turn)) + 1 : 0;
  return { nodes, edges, columns, selfSufficient: cfg.self_sufficient };
}

/** Edges must always point from the current question back to earlier turns. */
export function forwardEdges(layout: CfgLayout): EdgePosition[] {
  return layout.edges.filter((edge) => edge.to.turn >= edge.from.turn);
}

export function hasNoForwardEdges(layout: CfgLayout): boolean {
  return forwardEdges(layout).length === 0;
}
