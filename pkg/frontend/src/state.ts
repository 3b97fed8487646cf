import { FIELD_KEYS, SYMPTOM_KEYS, type FieldKey, type SymptomKey } from "./questions.js";
import type { PredictRequest, PredictResponse } from "./types.js";

export type Gender = "Male" | "Female";
export type SubmitStatus = "idle" | "pending" | "done" | "failed";

export interface FormState {
  age: number | null;
  gender: Gender | null;
  symptoms: Record<SymptomKey, boolean | null>;
  status: SubmitStatus;
  result: PredictResponse | null;
  /** Per-field validation message from a 400 response. */
  fieldErrors: Partial<Record<FieldKey, string>>;
  /** Network/unavailable message; the form keeps its answers for retry. */
  retryMessage: string | null;
}

export function initialState(): FormState {
  const symptoms = {} as Record<SymptomKey, boolean | null>;
  for (const key of SYMPTOM_KEYS) {
    symptoms[key] = null;
  }
  return {
    age: null,
    gender: null,
    symptoms,
    status: "idle",
    result: null,
    fieldErrors: {},
    retryMessage: null,
  };
}

export function setAnswer(state: FormState, key: FieldKey, value: number | Gender | boolean): FormState {
  const next: FormState = {
    ...state,
    symptoms: { ...state.symptoms },
    fieldErrors: { ...state.fieldErrors },
  };
  if (key === "age") {
    next.age = typeof value === "number" && Number.isInteger(value) && value >= 0 ? value : null;
  } else if (key === "gender") {
    next.gender = value === "Male" || value === "Female" ? value : null;
  } else {
    next.symptoms[key] = typeof value === "boolean" ? value : null;
  }
  delete next.fieldErrors[key];
  return next;
}

/** True once every one of the 16 questions has an answer. */
export function isComplete(state: FormState): boolean {
  return (
    state.age !== null &&
    state.gender !== null &&
    SYMPTOM_KEYS.every((key) => state.symptoms[key] !== null)
  );
}

export function canSubmit(state: FormState): boolean {
  return isComplete(state) && state.status !== "pending";
}

/** Build the request body; exactly the 16 required keys, nothing else. */
export function toRequestBody(state: FormState): PredictRequest {
  if (!isComplete(state)) {
    throw new Error("form is incomplete");
  }
  const body = {
    age: state.age as number,
    gender: state.gender as Gender,
  } as PredictRequest;
  for (const key of SYMPTOM_KEYS) {
    body[key] = state.symptoms[key] as boolean;
  }
  const keys = Object.keys(body);
  if (keys.length !== FIELD_KEYS.length) {
    throw new Error(`request body has ${keys.length} keys, expected ${FIELD_KEYS.length}`);
  }
  return body;
}
