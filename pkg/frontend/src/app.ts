// DOM application: renders the view state and funnels user actions through
// the REST client. All server responses are authoritative; the UI never
// speculates about answers or evidences.

import { ApiError, SessionApi, type Source, type TurnPayload } from "./api";
import { COLUMN_WIDTH, ROW_HEIGHT, layoutCfg } from "./cfg";
import {
  applyServerTurn,
  answerDiff,
  initialState,
  parseSr,
  selectTurn,
  serializeSr,
  setFilter,
  slotError,
  visibleEvidences,
  type SourceFilter,
  type SrSlots,
  type ViewState,
} from "./state";

const SOURCE_BADGES: Source[] = ["KB", "TEXT", "TABLE", "INFO"];
const SLOT_FIELDS: Array<{ key: keyof SrSlots; label: string; css: string }> = [
  { key: "context", label: "context entities", css: "slot-context" },
  { key: "question", label: "question entities", css: "slot-question" },
  { key: "predicate", label: "predicate", css: "slot-predicate" },
  { key: "answerType", label: "answer type", css: "slot-type" },
];

export class App {
  state: ViewState = initialState();
  lastDiff: { before: string; after: string } | null = null;

  constructor(
    readonly api: SessionApi,
    readonly root: HTMLElement,
  ) {
    this.root.innerHTML = `
      <div class="error-banner" id="error" hidden></div>
      <div class="stale-banner" id="stale" hidden>
        Session expired. <button id="recreate">Start a new session</button>
      </div>
      <section id="transcript" class="transcript"></section>
      <form id="ask-form" class="ask-form">
        <input id="ask-input" type="text" placeholder="Ask a question" autocomplete="off" />
        <button type="submit">Ask</button>
      </form>
      <section id="detail" hidden>
        <h3>Turn <span id="detail-turn"></span></h3>
        <form id="sr-editor" class="sr-editor"></form>
        <div id="answer-diff" hidden></div>
        <svg id="cfg" class="cfg"></svg>
        <div id="evidence-controls"></div>
        <ul id="evidence-panel" class="evidence-panel"></ul>
      </section>
    `;
    this.bind();
  }

  private bind() {
    const form = this.root.querySelector("#ask-form") as HTMLFormElement;
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      const input = this.root.querySelector("#ask-input") as HTMLInputElement;
      const question = input.value.trim();
      if (question) {
        input.value = "";
        void this.ask(question);
      }
    });
    const recreate = this.root.querySelector("#recreate") as HTMLButtonElement;
    recreate.addEventListener("click", () => void this.start());
  }

  async start(): Promise<void> {
    this.state = { ...initialState(), sessionId: await this.api.createSession() };
    this.render();
  }

  async ask(question: string): Promise<TurnPayload | null> {
    if (!this.state.sessionId) await this.start();
    try {
      const payload = await this.api.ask(this.state.sessionId as string, question);
      this.state = applyServerTurn(this.state, payload);
      this.state = selectTurn(this.state, payload.turn);
      this.lastDiff = null;
      this.render();
      return payload;
    } catch (error) {
      this.surface(error);
      return null;
    }
  }

  select(index: number): void {
    this.state = selectTurn(this.state, index);
    this.lastDiff = null;
    this.render();
  }

  filter(value: SourceFilter): void {
    this.state = setFilter(this.state, value);
    this.render();
  }

  updateEditor(slots: Partial<SrSlots>): void {
    if (!this.state.editor) return;
    this.state = { ...this.state, editor: { ...this.state.editor, ...slots } };
    this.render();
  }

  async reask(): Promise<TurnPayload | null> {
    const { editor, selectedTurn, sessionId } = this.state;
    if (editor === null || selectedTurn === null || sessionId === null) return null;
    const invalid = slotError(editor);
    if (invalid) {
      this.state = { ...this.state, error: invalid };
      this.render();
      return null;
    }
    const before = this.state.transcript[selectedTurn];
    try {
      const payload = await this.api.reaskTurn(sessionId, selectedTurn, serializeSr(editor));
      const diff = answerDiff(before, payload);
      this.state = applyServerTurn(this.state, payload);
      this.state = selectTurn(this.state, selectedTurn);
      this.lastDiff = diff.changed ? { before: diff.before, after: diff.after } : null;
      this.render();
      return payload;
    } catch (error) {
      this.surface(error);
      return null;
    }
  }

  private surface(error: unknown): void {
    if (error instanceof ApiError && error.status === 404) {
      this.state = { ...this.state, staleSession: true };
    } else if (error instanceof ApiError) {
      const detail =
        typeof error.detail === "object" && error.detail !== null
          ? JSON.stringify((error.detail as { detail?: unknown }).detail ?? error.detail)
          : String(error.detail);
      this.state = { ...this.state, error: `server error ${error.status}: ${detail}` };
    } else {
      this.state = { ...this.state, error: String(error) };
    }
    this.render();
  }

  render(): void {
    this.renderBanners();
    this.renderTranscript();
    this.renderDetail();
  }

  private renderBanners(): void {
    const errorBanner = this.root.querySelector("#error") as HTMLElement;
    errorBanner.hidden = this.state.error === null;
    errorBanner.textContent = this.state.error ?? "";
    const staleBanner = this.root.querySelector("#stale") as HTMLElement;
    staleBanner.hidden = !this.state.staleSession;
  }

  private renderTranscript(): void {
    const container = this.root.querySelector("#transcript") as HTMLElement;
    container.innerHTML = "";
    this.state.transcript.forEach((turn, index) => {
      const card = document.createElement("article");
      card.className = "qa-card" + (index === this.state.selectedTurn ? " selected" : "");
      card.dataset.turn = String(index);
      const badge = turn.cfg.self_sufficient
        ? '<span class="self-sufficient">self-sufficient</span>'
        : "";
      card.innerHTML = `
        <div class="qa-question">q${index}: ${escapeHtml(turn.question)} ${badge}</div>
        <div class="qa-answer">${escapeHtml(turn.answer)}</div>
      `;
      card.addEventListener("click", () => this.select(index));
      container.appendChild(card);
    });
  }

  private renderDetail(): void {
    const detail = this.root.querySelector("#detail") as HTMLElement;
    const index = this.state.selectedTurn;
    if (index === null || !this.state.transcript[index]) {
      detail.hidden = true;
      return;
    }
    detail.hidden = false;
    (this.root.querySelector("#detail-turn") as HTMLElement).textContent = String(index);
    this.renderEditor();
    this.renderDiff();
    this.renderCfg(this.state.transcript[index]);
    this.renderEvidences(this.state.transcript[index]);
  }

  private renderEditor(): void {
    const form = this.root.querySelector("#sr-editor") as HTMLFormElement;
    const editor = this.state.editor;
    if (!editor) {
      form.innerHTML = "";
      return;
    }
    form.innerHTML = "";
    for (const field of SLOT_FIELDS) {
      const wrapper = document.createElement("label");
      wrapper.className = `sr-slot ${field.css}`;
      wrapper.textContent = field.label;
      const input = document.createElement("input");
      input.type = "text";
      input.value = editor[field.key];
      input.dataset.slot = field.key;
      input.addEventListener("input", () => {
        if (this.state.editor) {
          this.state.editor[field.key] = input.value;
        }
      });
      wrapper.appendChild(input);
      form.appendChild(wrapper);
    }
    const button = document.createElement("button");
    button.type = "submit";
    button.id = "reask";
    button.textContent = "Re-ask with edited frame";
    form.appendChild(button);
    form.onsubmit = (event) => {
      event.preventDefault();
      void this.reask();
    };
  }

  private renderDiff(): void {
    const diffBox = this.root.querySelector("#answer-diff") as HTMLElement;
    if (!this.lastDiff) {
      diffBox.hidden = true;
      return;
    }
    diffBox.hidden = false;
    diffBox.innerHTML = `answer changed: <del>${escapeHtml(this.lastDiff.before)}</del> → <ins>${escapeHtml(this.lastDiff.after)}</ins>`;
  }

  private renderCfg(turn: TurnPayload): void {
    const svg = this.root.querySelector("#cfg") as SVGSVGElement & HTMLElement;
    const layout = layoutCfg(turn.cfg);
    svg.setAttribute("width", String(Math.max(1, layout.columns) * COLUMN_WIDTH));
    svg.setAttribute("height", String(2 * ROW_HEIGHT));
    svg.innerHTML = "";
    for (const edge of layout.edges) {
      const line = document.createElementNS("http://www.w3.org/2000/svg", "line");
      line.setAttribute("x1", String(edge.from.x));
      line.setAttribute("y1", String(edge.from.y));
      line.setAttribute("x2", String(edge.to.x));
      line.setAttribute("y2", String(edge.to.y));
      line.setAttribute("class", "cfg-edge");
      line.dataset.words = edge.words.join(" ");
      svg.appendChild(line);
      const label = document.createElementNS("http://www.w3.org/2000/svg", "text");
      label.setAttribute("x", String((edge.from.x + edge.to.x) / 2));
      label.setAttribute("y", String((edge.from.y + edge.to.y) / 2 - 4));
      label.setAttribute("class", "cfg-edge-label");
      label.textContent = edge.words.join(", ");
      svg.appendChild(label);
    }
    for (const node of layout.nodes) {
      const circle = document.createElementNS("http://www.w3.org/2000/svg", "circle");
      circle.setAttribute("cx", String(node.x));
      circle.setAttribute("cy", String(node.y));
      circle.setAttribute("r", "14");
      circle.setAttribute("class", `cfg-node cfg-${node.role}`);
      circle.dataset.turn = String(node.turn);
      circle.dataset.id = node.id;
      const title = document.createElementNS("http://www.w3.org/2000/svg", "title");
      title.textContent = node.label;
      circle.appendChild(title);
      svg.appendChild(circle);
      const text = document.createElementNS("http://www.w3.org/2000/svg", "text");
      text.setAttribute("x", String(node.x));
      text.setAttribute("y", String(node.y + 4));
      text.setAttribute("class", "cfg-node-label");
      text.textContent = node.id;
      svg.appendChild(text);
    }
  }

  private renderEvidences(turn: TurnPayload): void {
    const controls = this.root.querySelector("#evidence-controls") as HTMLElement;
    controls.innerHTML = "";
    const select = document.createElement("select");
    select.id = "source-filter";
    for (const option of ["ALL", ...SOURCE_BADGES]) {
      const element = document.createElement("option");
      element.value = option;
      element.textContent = option;
      element.selected = option === this.state.sourceFilter;
      select.appendChild(element);
    }
    select.addEventListener("change", () => this.filter(select.value as SourceFilter));
    controls.appendChild(select);

    const panel = this.root.querySelector("#evidence-panel") as HTMLElement;
    panel.innerHTML = "";
    for (const evidence of visibleEvidences(turn, this.state.sourceFilter)) {
      const item = document.createElement("li");
      item.className = "evidence";
      item.dataset.id = evidence.id;
      item.innerHTML = `
        <span class="badge badge-${evidence.source.toLowerCase()}">${evidence.source}</span>
        <span class="score">${evidence.score.toFixed(2)}</span>
        <span class="evidence-text">${escapeHtml(evidence.text)}</span>
      `;
      panel.appendChild(item);
    }
  }
}

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export { parseSr, serializeSr };
