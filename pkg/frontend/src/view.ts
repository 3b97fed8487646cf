import { FIELD_LABELS, SYMPTOM_KEYS, type FieldKey } from "./questions.js";
import { canSubmit, type FormState, type Gender } from "./state.js";

export interface Handlers {
  onAnswer(key: FieldKey, value: number | Gender | boolean): void;
  onSubmit(): void;
  onReset(): void;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text = "",
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [name, value] of Object.entries(attrs)) {
    node.setAttribute(name, value);
  }
  if (text) {
    node.textContent = text;
  }
  return node;
}

function choiceButton(
  label: string,
  pressed: boolean,
  onClick: () => void,
): HTMLButtonElement {
  const button = el("button", { type: "button", "aria-pressed": String(pressed) }, label);
  button.className = pressed ? "choice selected" : "choice";
  button.addEventListener("click", onClick);
  return button;
}

function questionRow(state: FormState, key: FieldKey, handlers: Handlers): HTMLElement {
  const row = el("div", { class: "question", "data-field": key });
  const label = FIELD_LABELS[key];

  if (key === "age") {
    const input = el("input", {
      id: "field-age",
      type: "number",
      min: "0",
      max: "130",
      placeholder: "years",
    });
    if (state.age !== null) {
      input.value = String(state.age);
    }
    input.addEventListener("change", () => {
      const parsed = Number.parseInt(input.value, 10);
      handlers.onAnswer("age", Number.isNaN(parsed) ? (null as unknown as number) : parsed);
    });
    const labelNode = el("label", { for: "field-age" }, label);
    row.append(labelNode, input);
  } else if (key === "gender") {
    row.append(el("span", { class: "label" }, label));
    const group = el("div", { class: "choices", role: "group", "aria-label": label });
    for (const option of ["Male", "Female"] as const) {
      group.append(
        choiceButton(option, state.gender === option, () => handlers.onAnswer("gender", option)),
      );
    }
    row.append(group);
  } else {
    row.append(el("span", { class: "label" }, label));
    const group = el("div", { class: "choices", role: "group", "aria-label": label });
    const current = state.symptoms[key];
    group.append(
      choiceButton("Yes", current === true, () => handlers.onAnswer(key, true)),
      choiceButton("No", current === false, () => handlers.onAnswer(key, false)),
    );
    row.append(group);
  }

  const message = state.fieldErrors[key];
  if (message) {
    row.append(el("p", { class: "field-error", "data-error-for": key }, message));
  }
  return row;
}

function resultSection(state: FormState): HTMLElement | null {
  if (state.status !== "done" || !state.result) {
    return null;
  }
  const { prediction, raw_score, disclaimer } = state.result;
  if (prediction === "diabetes") {
    const card = el("section", { class: "result alert", role: "alert" });
    card.append(
      el("h2", {}, "Elevated diabetes risk"),
      el(
        "p",
        { class: "advice" },
        "Your answers match patterns seen in early-stage diabetes. Please seek medical assistance and get a blood-sugar test.",
      ),
      el("p", { class: "score" }, `Raw model score: ${raw_score.toFixed(4)}`),
      el("p", { class: "disclaimer" }, disclaimer),
    );
    return card;
  }
  const card = el("section", { class: "result neutral" });
  card.append(
    el("h2", {}, "No elevated risk detected"),
    el(
      "p",
      { class: "advice" },
      "Your answers do not match the screening pattern. Keep up regular checkups.",
    ),
    el("p", { class: "score" }, `Raw model score: ${raw_score.toFixed(4)}`),
    el("p", { class: "disclaimer" }, disclaimer),
  );
  return card;
}

export function render(root: HTMLElement, state: FormState, handlers: Handlers): void {
  root.textContent = "";
  const main = el("main", { class: "questionnaire" });
  main.append(
    el("h1", {}, "Diabetes risk questionnaire"),
    el(
      "p",
      { class: "intro" },
      "Answer all 16 questions to screen for early-stage diabetes risk.",
    ),
  );

  const form = el("form", { "aria-label": "questionnaire" });
  form.addEventListener("submit", (event) => event.preventDefault());
  form.append(questionRow(state, "age", handlers), questionRow(state, "gender", handlers));
  for (const key of SYMPTOM_KEYS) {
    form.append(questionRow(state, key, handlers));
  }
  main.append(form);

  const actions = el("div", { class: "actions" });
  const submit = el("button", { id: "submit", type: "button" }, "Check my risk");
  submit.disabled = !canSubmit(state);
  submit.addEventListener("click", () => handlers.onSubmit());
  const reset = el("button", { id: "reset", type: "button", class: "secondary" }, "Reset");
  reset.addEventListener("click", () => handlers.onReset());
  actions.append(submit, reset);
  main.append(actions);

  if (state.status === "pending") {
    main.append(el("p", { class: "pending", role: "status" }, "Checking your answers..."));
  }

  const result = resultSection(state);
  if (result) {
    main.append(result);
  }

  if (state.retryMessage) {
    const retry = el("section", { class: "retry" });
    retry.append(el("p", { class: "retry-message" }, state.retryMessage));
    const button = el("button", { id: "retry", type: "button" }, "Try again");
    button.addEventListener("click", () => handlers.onSubmit());
    retry.append(button);
    main.append(retry);
  }

  root.append(main);
}
