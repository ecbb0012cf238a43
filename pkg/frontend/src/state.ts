/** View-model state: a pure function of server responses plus drafts.
 *
 * Nothing here talks to the network or the DOM, so every transition is
 * unit-testable; rendering consumes the result verbatim.  No rule or QAP
 * text is synthesized client-side.
 */

import type { GenerateResponse, Qap, TeachRequest, TeachResponse } from "./api.js";

export interface CardOutcome {
  kind: "learned" | "duplicate" | "error";
  message: string;
  rule?: { x: string[]; y: string[] };
  qaps: Qap[];
}

export interface TeachCard {
  request: TeachRequest;
  draft: string;
  submitting: boolean;
  outcome?: CardOutcome;
}

export interface PlaygroundState {
  text: string;
  busy: boolean;
  qaps: Qap[];
  teachRequests: TeachRequest[];
  error?: string;
}

export interface AppState {
  connected: boolean;
  cards: TeachCard[];
  playground: PlaygroundState;
}

export function initialState(): AppState {
  return {
    connected: false,
    cards: [],
    playground: { text: "", busy: false, qaps: [], teachRequests: [] },
  };
}

/** Merge a fresh queue poll, keeping drafts and outcomes for known cards. */
export function applyQueue(state: AppState, requests: TeachRequest[]): AppState {
  const known = new Map(state.cards.map((c) => [c.request.id, c]));
  const cards = requests.map((request) => {
    const old = known.get(request.id);
    return old
      ? { ...old, request }
      : { request, draft: "", submitting: false };
  });
  // resolved cards with a visible outcome stay on screen until dismissed
  for (const card of state.cards) {
    if (card.outcome && !requests.some((r) => r.id === card.request.id)) {
      cards.push(card);
    }
  }
  return { ...state, connected: true, cards };
}

export function setDraft(state: AppState, requestId: number, draft: string): AppState {
  return {
    ...state,
    cards: state.cards.map((c) => (c.request.id === requestId ? { ...c, draft } : c)),
  };
}

export function canSubmit(card: TeachCard): boolean {
  return card.draft.trim().length > 0 && !card.submitting;
}

export function beginSubmit(state: AppState, requestId: number): AppState {
  return {
    ...state,
    cards: state.cards.map((c) =>
      c.request.id === requestId ? { ...c, submitting: true } : c,
    ),
  };
}

export function applyTeachResult(
  state: AppState,
  requestId: number,
  result: TeachResponse,
): AppState {
  let outcome: CardOutcome;
  if (result.error) {
    outcome = { kind: "error", message: result.error.detail, qaps: [] };
  } else if (result.duplicate) {
    outcome = {
      kind: "duplicate",
      message: `already known as rule ${result.entry?.id}`,
      qaps: result.qaps_now,
    };
  } else {
    outcome = {
      kind: "learned",
      message: `learned rule ${result.entry?.id}`,
      rule: result.entry ? { x: result.entry.x, y: result.entry.y } : undefined,
      qaps: result.qaps_now,
    };
  }
  return {
    ...state,
    cards: state.cards.map((c) =>
      c.request.id === requestId ? { ...c, submitting: false, outcome } : c,
    ),
  };
}

export function failSubmit(state: AppState, requestId: number, message: string): AppState {
  return applyTeachResult(state, requestId, {
    error: { code: "request_failed", detail: message },
    qaps_now: [],
  });
}

export function dismissCard(state: AppState, requestId: number): AppState {
  return {
    ...state,
    cards: state.cards.filter(
      (c) => c.request.id !== requestId || c.request.status === "open",
    ),
  };
}

export function setPlaygroundText(state: AppState, text: string): AppState {
  return { ...state, playground: { ...state.playground, text } };
}

export function beginGenerate(state: AppState): AppState {
  return { ...state, playground: { ...state.playground, busy: true, error: undefined } };
}

export function applyGenerate(state: AppState, response: GenerateResponse): AppState {
  return {
    ...state,
    playground: {
      ...state.playground,
      busy: false,
      qaps: response.qaps,
      teachRequests: response.teach_requests,
    },
  };
}

export function failGenerate(state: AppState, message: string): AppState {
  return {
    ...state,
    playground: { ...state.playground, busy: false, qaps: [], teachRequests: [], error: message },
  };
}

export function disconnect(state: AppState): AppState {
  return { ...state, connected: false };
}
