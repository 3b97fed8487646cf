import type { SymptomKey } from "./questions.js";

/** Wire shape posted to /api/predict: always exactly these 16 keys. */
export type PredictRequest = {
  age: number;
  gender: "Male" | "Female";
} & Record<SymptomKey, boolean>;

export interface PredictResponse {
  prediction: "diabetes" | "normal";
  raw_score: number;
  model_activation: string;
  disclaimer: string;
}
