/** DOM rendering. All strings come from the state (hence the service). */

import type { Qap, TeachRequest } from "./api.js";
import type { AppState, TeachCard } from "./state.js";

export interface Handlers {
  onDraftChange(requestId: number, draft: string): void;
  onSubmit(requestId: number): void;
  onDismiss(requestId: number): void;
  onPlaygroundText(text: string): void;
  onGenerate(): void;
  onJumpToTeaching(): void;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function chips(sequence: string[]): HTMLElement {
  const wrap = el("div", "chips");
  for (const tagSet of sequence) {
    wrap.appendChild(el("span", "chip", tagSet));
  }
  return wrap;
}

function qapList(qaps: Qap[]): HTMLElement {
  const list = el("div", "qaps");
  for (const qap of qaps) {
    const item = el("div", "qap");
    item.appendChild(el("div", "question", `Q: ${qap.question}`));
    item.appendChild(el("div", "answer", `A: ${qap.answer}`));
    list.appendChild(item);
  }
  return list;
}

function teachCard(card: TeachCard, handlers: Handlers): HTMLElement {
  const box = el("section", `card ${card.outcome ? "card-" + card.outcome.kind : ""}`);
  box.appendChild(el("h3", "sentence", card.request.sentence));
  box.appendChild(chips(card.request.built_sequence));
  box.appendChild(el("div", "meta", `match: ${card.request.best_match_class}`));

  if (card.outcome) {
    const note = el("div", `outcome ${card.outcome.kind}`, card.outcome.message);
    box.appendChild(note);
    if (card.outcome.rule) {
      box.appendChild(el("div", "rule-label", "declarative pattern"));
      box.appendChild(chips(card.outcome.rule.x));
      box.appendChild(el("div", "rule-label", "interrogative pattern"));
      box.appendChild(chips(card.outcome.rule.y));
    }
    if (card.outcome.qaps.length) box.appendChild(qapList(card.outcome.qaps));
    if (card.request.status !== "open" || card.outcome.kind === "learned") {
      const dismiss = el("button", "dismiss", "dismiss");
      dismiss.addEventListener("click", () => handlers.onDismiss(card.request.id));
      box.appendChild(dismiss);
      return box;
    }
  }

  const row = el("div", "teach-row");
  const input = el("input", "draft") as HTMLInputElement;
  input.placeholder = "type an interrogative sentence for this pattern";
  input.value = card.draft;
  input.addEventListener("input", () =>
    handlers.onDraftChange(card.request.id, input.value),
  );
  const button = el("button", "submit", card.submitting ? "teaching..." : "teach");
  button.disabled = card.submitting || card.draft.trim().length === 0;
  button.addEventListener("click", () => handlers.onSubmit(card.request.id));
  row.appendChild(input);
  row.appendChild(button);
  box.appendChild(row);
  return box;
}

function playground(state: AppState, handlers: Handlers): HTMLElement {
  const box = el("section", "playground");
  box.appendChild(el("h2", undefined, "Playground"));
  const row = el("div", "generate-row");
  const input = el("input", "sentence-input") as HTMLInputElement;
  input.placeholder = "type a declarative sentence";
  input.value = state.playground.text;
  input.addEventListener("input", () => handlers.onPlaygroundText(input.value));
  const button = el("button", "generate", state.playground.busy ? "working..." : "generate");
  button.disabled = state.playground.busy || state.playground.text.trim().length === 0;
  button.addEventListener("click", () => handlers.onGenerate());
  row.appendChild(input);
  row.appendChild(button);
  box.appendChild(row);
  if (state.playground.error) {
    box.appendChild(el("div", "error", state.playground.error));
  }
  if (state.playground.qaps.length) {
    box.appendChild(qapList(state.playground.qaps));
  }
  for (const request of state.playground.teachRequests) {
    const prompt = el("div", "teach-prompt");
    prompt.appendChild(
      el("span", undefined, `no confident pattern for "${request.sentence}" yet - `),
    );
    const jump = el("a", "jump", "teach it");
    jump.href = "#queue";
    jump.addEventListener("click", () => handlers.onJumpToTeaching());
    prompt.appendChild(jump);
    box.appendChild(prompt);
  }
  return box;
}

function queue(state: AppState, handlers: Handlers): HTMLElement {
  const box = el("section", "queue");
  box.id = "queue";
  box.appendChild(el("h2", undefined, "Teaching queue"));
  if (!state.cards.length) {
    box.appendChild(el("div", "empty", "nothing to teach - every sentence matched"));
    return box;
  }
  for (const card of state.cards) {
    box.appendChild(teachCard(card, handlers));
  }
  return box;
}

export function render(root: HTMLElement, state: AppState, handlers: Handlers): void {
  root.replaceChildren();
  if (!state.connected) {
    root.appendChild(el("div", "banner", "service unreachable - retrying..."));
  }
  root.appendChild(playground(state, handlers));
  root.appendChild(queue(state, handlers));
}

export { teachCard as renderTeachCardForTest, qapList as renderQapListForTest };

// referenced only for documentation typing; keeps the import used
export type { TeachRequest };
