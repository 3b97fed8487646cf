import { FieldValidationError, ServiceUnavailableError, postPrediction } from "./api.js";
import type { FieldKey } from "./questions.js";
import {
  canSubmit,
  initialState,
  setAnswer,
  toRequestBody,
  type FormState,
  type Gender,
} from "./state.js";
import { render, type Handlers } from "./view.js";

declare global {
  interface Window {
    ELMSCREEN_API?: string;
  }
}

const DEFAULT_BASE_URL = "http://127.0.0.1:8000";

export function mount(root: HTMLElement, baseUrl?: string): void {
  const serviceUrl = baseUrl ?? window.ELMSCREEN_API ?? DEFAULT_BASE_URL;
  let state: FormState = initialState();

  const update = (next: FormState) => {
    state = next;
    render(root, state, handlers);
  };

  const handlers: Handlers = {
    onAnswer(key: FieldKey, value: number | Gender | boolean) {
      update({ ...setAnswer(state, key, value), retryMessage: null });
    },
    onReset() {
      update(initialState());
    },
    onSubmit() {
      if (!canSubmit(state)) {
        return;
      }
      const body = toRequestBody(state);
      update({ ...state, status: "pending", result: null, fieldErrors: {}, retryMessage: null });
      postPrediction(serviceUrl, body)
        .then((result) => {
          if (state.status !== "pending") {
            return; // stale response after a reset
          }
          update({ ...state, status: "done", result });
        })
        .catch((err) => {
          if (state.status !== "pending") {
            return;
          }
          if (err instanceof FieldValidationError && err.field) {
            update({
              ...state,
              status: "failed",
              fieldErrors: { [err.field]: err.message },
            });
          } else if (err instanceof ServiceUnavailableError) {
            update({ ...state, status: "failed", retryMessage: err.message });
          } else {
            update({
              ...state,
              status: "failed",
              retryMessage: err instanceof Error ? err.message : String(err),
            });
          }
        });
    },
  };

  render(root, state, handlers);
}

const root = typeof document !== "undefined" ? document.getElementById("app") : null;
if (root) {
  mount(root);
}
