/** Bootstrap: wires the service client, state transitions, and rendering. */

import { ServiceClient } from "./api.js";
import { render, type Handlers } from "./render.js";
import {
  applyGenerate,
  applyQueue,
  applyTeachResult,
  beginGenerate,
  beginSubmit,
  canSubmit,
  disconnect,
  dismissCard,
  failGenerate,
  failSubmit,
  initialState,
  setDraft,
  setPlaygroundText,
  type AppState,
} from "./state.js";

const POLL_MS = 3000;

function serviceBaseUrl(): string {
  const params = new URLSearchParams(window.location.search);
  return params.get("service") ?? "http://127.0.0.1:8204";
}

export function start(root: HTMLElement): void {
  const client = new ServiceClient(serviceBaseUrl());
  let state: AppState = initialState();

  const update = (next: AppState): void => {
    state = next;
    render(root, state, handlers);
  };

  const handlers: Handlers = {
    onDraftChange: (id, draft) => update(setDraft(state, id, draft)),
    onDismiss: (id) => update(dismissCard(state, id)),
    onPlaygroundText: (text) => update(setPlaygroundText(state, text)),
    onJumpToTeaching: () => void refreshQueue(),
    onSubmit: (id) => {
      const card = state.cards.find((c) => c.request.id === id);
      if (!card || !canSubmit(card)) return;
      update(beginSubmit(state, id));
      client
        .teach(id, card.draft.trim())
        .then((result) => update(applyTeachResult(state, id, result)))
        .catch((err) => update(failSubmit(state, id, String(err))))
        .then(() => refreshQueue());
    },
    onGenerate: () => {
      const text = state.playground.text.trim();
      if (!text) return;
      update(beginGenerate(state));
      client
        .generate(text)
        .then((response) => update(applyGenerate(state, response)))
        .catch((err) => update(failGenerate(state, String(err))))
        .then(() => refreshQueue());
    },
  };

  async function refreshQueue(): Promise<void> {
    try {
      const body = await client.teachQueue();
      update(applyQueue(state, body.requests));
    } catch {
      update(disconnect(state));
    }
  }

  void refreshQueue();
  setInterval(refreshQueue, POLL_MS);
  render(root, state, handlers);
}

if (typeof document !== "undefined") {
  const root = document.getElementById("app");
  if (root) start(root);
}
